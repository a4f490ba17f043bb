"""The q-exterior algebra and its dual for U_q(gl n).

Slots of a ``SubsetBasisVector`` carry Z-labels: p > 0 is V(p), -p is the
dual V-bar(p) and 0 the trivial factor. Generators act on tensors through
the comultiplication

    D(E_i) = E_i (x) K_i K_{i+1}^-1 + 1 (x) E_i
    D(F_i) = F_i (x) 1 + K_i^-1 K_{i+1} (x) F_i

and every structure map of this module is a module homomorphism for it.
"""
import logging
from collections import deque
from functools import lru_cache
from itertools import combinations
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from webbasis.config import settings
from webbasis.models.report import SuiteReport
from webbasis.models.vectors import Key, SubsetBasisVector, SubsetIndex
from webbasis.models.word import GlWeight
from webbasis.services.errors import RankError, ScaleGuardError, SlotMismatchError
from webbasis.services.qint import ONE, ZERO, LaurentPoly, minus_q_power, q_power, qinteger

logger = logging.getLogger(__name__)

Subset = FrozenSet[int]
Rewrite = Callable[[Tuple[Subset, ...]], Iterable[Tuple[Tuple[Subset, ...], LaurentPoly]]]


def pi(I: Iterable[int], J: Iterable[int]) -> int:
    """Number of pairs (i, j) in I x J with i > j."""
    J = list(J)
    return sum(1 for i in I for j in J if i > j)


def subsets(n: int, p: int) -> List[Subset]:
    """All p-subsets of {1..n} in lexicographic order."""
    if p < 0 or p > n:
        raise RankError(f"subset size {p} outside 0..{n}")
    return [frozenset(c) for c in combinations(range(1, n + 1), p)]


# ---------------------------------------------------------------------------
# generator actions

def _check_generator(n: int, i: int, top: int) -> None:
    if i < 1 or i > top:
        raise RankError(f"generator index {i} outside 1..{top} for n={n}")


def _raise_subset(i: int, part: Subset, dual: bool) -> Optional[Subset]:
    """E_i on a single factor."""
    src, dst = (i, i + 1) if dual else (i + 1, i)
    if src in part and dst not in part:
        return (part - {src}) | {dst}
    return None


def _lower_subset(i: int, part: Subset, dual: bool) -> Optional[Subset]:
    """F_i on a single factor."""
    src, dst = (i + 1, i) if dual else (i, i + 1)
    if src in part and dst not in part:
        return (part - {src}) | {dst}
    return None


def _k_exponent(i: int, part: Subset, label: int) -> int:
    if i not in part:
        return 0
    return -1 if label < 0 else 1


def _kk_exponent(i: int, part: Subset, label: int) -> int:
    """Exponent of q for K_i K_{i+1}^-1 on a single factor."""
    return _k_exponent(i, part, label) - _k_exponent(i + 1, part, label)


def act_E(i: int, v: SubsetBasisVector) -> SubsetBasisVector:
    _check_generator(v.n, i, v.n - 1)
    terms: Dict[Key, LaurentPoly] = {}
    for key, coeff in v.terms.items():
        for j, (part, label) in enumerate(zip(key, v.slots)):
            moved = _raise_subset(i, part, label < 0)
            if moved is None:
                continue
            shift = sum(_kk_exponent(i, key[l], v.slots[l]) for l in range(j + 1, len(key)))
            new_key = key[:j] + (moved,) + key[j + 1:]
            terms[new_key] = terms.get(new_key, ZERO) + coeff * q_power(shift)
    return SubsetBasisVector(v.n, v.slots, terms)


def act_F(i: int, v: SubsetBasisVector) -> SubsetBasisVector:
    _check_generator(v.n, i, v.n - 1)
    terms: Dict[Key, LaurentPoly] = {}
    for key, coeff in v.terms.items():
        for j, (part, label) in enumerate(zip(key, v.slots)):
            moved = _lower_subset(i, part, label < 0)
            if moved is None:
                continue
            shift = -sum(_kk_exponent(i, key[l], v.slots[l]) for l in range(j))
            new_key = key[:j] + (moved,) + key[j + 1:]
            terms[new_key] = terms.get(new_key, ZERO) + coeff * q_power(shift)
    return SubsetBasisVector(v.n, v.slots, terms)


def act_K(i: int, sign: int, v: SubsetBasisVector) -> SubsetBasisVector:
    """K_i (sign=+1) or K_i^-1 (sign=-1), grouplike on every factor."""
    _check_generator(v.n, i, v.n)
    if sign not in (1, -1):
        raise ValueError(f"K sign must be +1 or -1, got {sign}")
    terms = {}
    for key, coeff in v.terms.items():
        exponent = sign * sum(_k_exponent(i, part, label) for part, label in zip(key, v.slots))
        terms[key] = coeff * q_power(exponent)
    return SubsetBasisVector(v.n, v.slots, terms)


def act_on_tensor(generators: Sequence[str], v: SubsetBasisVector) -> SubsetBasisVector:
    """Apply a word of generators such as ``["E1", "F2", "K1^-1"]``, rightmost first."""
    for name in reversed(list(generators)):
        kind, rest = name[0].upper(), name[1:]
        inverse = rest.endswith("^-1")
        index = int(rest[:-3] if inverse else rest)
        if kind == "E" and not inverse:
            v = act_E(index, v)
        elif kind == "F" and not inverse:
            v = act_F(index, v)
        elif kind == "K":
            v = act_K(index, -1 if inverse else 1, v)
        else:
            raise ValueError(f"unknown generator {name!r}")
    return v


# ---------------------------------------------------------------------------
# scalar coefficients shared with the state sum

def merge_coefficient(I: Subset, J: Subset) -> LaurentPoly:
    """v_I (x) v_J -> (-q)^(-pi(I,J)) v_{I u J}; zero unless disjoint."""
    if I & J:
        return ZERO
    return minus_q_power(-pi(I, J))


def split_coefficient(J: Subset, K: Subset) -> LaurentPoly:
    """Coefficient of v_J (x) v_K in the image of v_{J u K}."""
    return q_power(len(J) * len(K)) * minus_q_power(-pi(J, K))


def dual_merge_coefficient(A: Subset, B: Subset) -> LaurentPoly:
    """vb_A (x) vb_B -> (-q)^(-pi(B,A)) vb_{A u B}; zero unless disjoint."""
    if A & B:
        return ZERO
    return minus_q_power(-pi(B, A))


def dual_split_coefficient(J: Subset, K: Subset) -> LaurentPoly:
    """Coefficient of vb_J (x) vb_K in the image of vb_{J u K}."""
    return split_coefficient(K, J)


@lru_cache(maxsize=None)
def _pairing_table(n: int, p: int) -> Tuple[Tuple[Subset, int], ...]:
    start = frozenset(range(1, p + 1))
    table: Dict[Subset, int] = {start: 0}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for k in sorted(current):
            if k + 1 > n or k + 1 in current:
                continue
            # equivariance of ev under E_k: u_{..k+1..} = -q^-1 u_{..k..}
            moved = (current - {k}) | {k + 1}
            value = table[current] + 1
            if moved in table:
                if table[moved] != value:
                    raise ArithmeticError(f"inconsistent pairing constraints at n={n}, p={p}")
                continue
            table[moved] = value
            queue.append(moved)
    if len(table) != len(subsets(n, p)):
        raise ArithmeticError(f"pairing constraints do not reach every {p}-subset of 1..{n}")
    logger.debug(f"Solved pairing exponents for n={n}, p={p}: {len(table)} subsets")
    return tuple(sorted(table.items(), key=lambda kv: sorted(kv[0])))


def pairing_exponents(n: int, p: int) -> Dict[Subset, int]:
    """Exponents phi(I) with ev(v_I (x) vb_I) = (-q)^(-phi(I)), normalized by phi({1..p}) = 0.

    Solved from the equivariance constraints once per (n, p) and cached.
    """
    if n < 1:
        raise RankError(f"rank must be positive, got {n}")
    if p < 0 or p > n:
        raise RankError(f"pairing label {p} outside 0..{n}")
    if n > settings.MAX_PAIRING_RANK:
        raise ScaleGuardError(f"pairing tables limited to n <= {settings.MAX_PAIRING_RANK}, got {n}")
    return dict(_pairing_table(n, p))


def _loop_scale(n: int, p: int) -> int:
    """Exponent moved between coev and ev' so that both closed loops give the balanced qbinomial."""
    return p * (n - p)


def ev_coefficient(n: int, I: Subset) -> LaurentPoly:
    return minus_q_power(-pairing_exponents(n, len(I))[frozenset(I)])


def ev_dual_coefficient(n: int, I: Subset) -> LaurentPoly:
    p = len(I)
    return q_power(-_loop_scale(n, p)) * minus_q_power(pairing_exponents(n, p)[frozenset(I)])


def coev_coefficient(n: int, I: Subset) -> LaurentPoly:
    p = len(I)
    return q_power(_loop_scale(n, p)) * minus_q_power(-pairing_exponents(n, p)[frozenset(I)])


def coev_dual_coefficient(n: int, I: Subset) -> LaurentPoly:
    return minus_q_power(pairing_exponents(n, len(I))[frozenset(I)])


# ---------------------------------------------------------------------------
# linear maps on slot pairs

def _expect(v: SubsetBasisVector, pos: int, labels: Sequence[int]) -> None:
    actual = v.slots[pos:pos + len(labels)]
    if pos < 0 or tuple(actual) != tuple(labels):
        raise SlotMismatchError(f"expected slots {tuple(labels)} at position {pos}, found {tuple(actual)}")


def _check_label(n: int, label: int) -> None:
    if abs(label) > n:
        raise RankError(f"label {label} outside [-{n}, {n}]")


def _rewrite(v: SubsetBasisVector, pos: int, width: int, out_slots: Sequence[int], fn: Rewrite) -> SubsetBasisVector:
    terms: Dict[Key, LaurentPoly] = {}
    for key, coeff in v.terms.items():
        head, body, tail = key[:pos], key[pos:pos + width], key[pos + width:]
        for new_body, c in fn(body):
            if c.is_zero():
                continue
            new_key = head + tuple(new_body) + tail
            terms[new_key] = terms.get(new_key, ZERO) + coeff * c
    slots = v.slots[:pos] + tuple(out_slots) + v.slots[pos + width:]
    return SubsetBasisVector(v.n, slots, terms)


def drop_trivial(v: SubsetBasisVector, pos: int) -> SubsetBasisVector:
    _expect(v, pos, (0,))
    return _rewrite(v, pos, 1, (), lambda body: [((), ONE)])


def insert_trivial(v: SubsetBasisVector, pos: int) -> SubsetBasisVector:
    if pos < 0 or pos > len(v.slots):
        raise SlotMismatchError(f"cannot insert a slot at position {pos}")
    return _rewrite(v, pos, 0, (0,), lambda body: [((frozenset(),), ONE)])


def multiply(x: SubsetBasisVector, pos: int = 0) -> SubsetBasisVector:
    """V(a) (x) V(b) -> V(a+b) on slots pos, pos+1."""
    a, b = x.slots[pos:pos + 2] if len(x.slots) >= pos + 2 else (None, None)
    if a is None or a < 0 or b < 0:
        raise SlotMismatchError(f"multiply needs two plain slots at {pos}, found {x.slots}")
    _check_label(x.n, a + b)

    def fn(body):
        I, J = body
        c = merge_coefficient(I, J)
        return [((I | J,), c)] if c else []
    return _rewrite(x, pos, 2, (a + b,), fn)


def dual_multiply(x: SubsetBasisVector, pos: int = 0) -> SubsetBasisVector:
    """V-bar(a) (x) V-bar(b) -> V-bar(a+b) on slots pos, pos+1."""
    a, b = x.slots[pos:pos + 2] if len(x.slots) >= pos + 2 else (None, None)
    if a is None or a > 0 or b > 0:
        raise SlotMismatchError(f"dual_multiply needs two dual slots at {pos}, found {x.slots}")
    _check_label(x.n, a + b)

    def fn(body):
        A, B = body
        c = dual_merge_coefficient(A, B)
        return [((A | B,), c)] if c else []
    return _rewrite(x, pos, 2, (a + b,), fn)


def comultiply(v: SubsetBasisVector, a: int, b: int, pos: int = 0) -> SubsetBasisVector:
    """The (a, b) component of the comultiplication V(a+b) -> V(a) (x) V(b)."""
    if a < 0 or b < 0:
        raise SlotMismatchError(f"comultiply sizes must be non-negative, got ({a}, {b})")
    _expect(v, pos, (a + b,))

    def fn(body):
        (I,) = body
        return [((J, I - J), split_coefficient(J, I - J)) for J in map(frozenset, combinations(sorted(I), a))]
    return _rewrite(v, pos, 1, (a, b), fn)


def dual_comultiply(v: SubsetBasisVector, a: int, b: int, pos: int = 0) -> SubsetBasisVector:
    """V-bar(a+b) -> V-bar(a) (x) V-bar(b)."""
    if a < 0 or b < 0:
        raise SlotMismatchError(f"dual_comultiply sizes must be non-negative, got ({a}, {b})")
    _expect(v, pos, (-(a + b),))

    def fn(body):
        (I,) = body
        return [((J, I - J), dual_split_coefficient(J, I - J)) for J in map(frozenset, combinations(sorted(I), a))]
    return _rewrite(v, pos, 1, (-a, -b), fn)


def counit(v: SubsetBasisVector, pos: int = 0) -> SubsetBasisVector:
    """Projection of one slot onto V(0); the slot becomes trivial."""
    label = v.slots[pos] if 0 <= pos < len(v.slots) else None
    if label is None:
        raise SlotMismatchError(f"no slot at position {pos}")
    return _rewrite(v, pos, 1, (0,), lambda body: [((frozenset(),), ONE)] if not body[0] else [])


def evaluate_pairing(v: SubsetBasisVector, pos: int = 0) -> SubsetBasisVector:
    """ev on V(p) (x) V-bar(p) or ev' on V-bar(p) (x) V(p); the pair becomes one trivial slot."""
    a, b = v.slots[pos:pos + 2] if len(v.slots) >= pos + 2 else (None, None)
    if a is None or a != -b:
        raise SlotMismatchError(f"pairing needs opposite slots at {pos}, found {v.slots}")
    coefficient = ev_coefficient if a > 0 else ev_dual_coefficient

    def fn(body):
        I, J = body
        return [((frozenset(),), coefficient(v.n, I))] if I == J else []
    return _rewrite(v, pos, 2, (0,), fn)


def coevaluate(v: SubsetBasisVector, pos: int, label: int) -> SubsetBasisVector:
    """Replace the trivial slot at pos by coev (label > 0) or coev' (label < 0)."""
    _expect(v, pos, (0,))
    _check_label(v.n, label)
    p = abs(label)
    coefficient = coev_coefficient if label > 0 else coev_dual_coefficient

    def fn(body):
        return [((I, I), coefficient(v.n, I)) for I in subsets(v.n, p)]
    return _rewrite(v, pos, 1, (label, -label), fn)


def merge_map(r: int, s: int, x: SubsetBasisVector, pos: int = 0) -> SubsetBasisVector:
    """The module map V(r) (x) V(s) -> V(r+s) for all sign combinations."""
    n = x.n
    _check_label(n, r)
    _check_label(n, s)
    _check_label(n, r + s)
    _expect(x, pos, (r, s))
    if r == 0:
        return drop_trivial(x, pos)
    if s == 0:
        return drop_trivial(x, pos + 1)
    if r > 0 and s > 0:
        return multiply(x, pos)
    if r < 0 and s < 0:
        return dual_multiply(x, pos)
    if r > 0:
        t = -s
        if r > t:
            y = evaluate_pairing(comultiply(x, r - t, t, pos), pos + 1)
            return drop_trivial(y, pos + 1)
        if r < t:
            y = evaluate_pairing(dual_comultiply(x, r, t - r, pos + 1), pos)
            return drop_trivial(y, pos)
        return evaluate_pairing(x, pos)
    t = -r
    if t > s:
        y = evaluate_pairing(dual_comultiply(x, t - s, s, pos), pos + 1)
        return drop_trivial(y, pos + 1)
    if t < s:
        y = evaluate_pairing(comultiply(x, t, s - t, pos + 1), pos)
        return drop_trivial(y, pos)
    return evaluate_pairing(x, pos)


def split_map(r: int, s: int, x: SubsetBasisVector, pos: int = 0) -> SubsetBasisVector:
    """The module map V(r+s) -> V(r) (x) V(s) for all sign combinations."""
    n = x.n
    _check_label(n, r)
    _check_label(n, s)
    _check_label(n, r + s)
    _expect(x, pos, (r + s,))
    if r == 0:
        return insert_trivial(x, pos)
    if s == 0:
        return insert_trivial(x, pos + 1)
    if r > 0 and s > 0:
        return comultiply(x, r, s, pos)
    if r < 0 and s < 0:
        return dual_comultiply(x, -r, -s, pos)
    if r < 0:
        t, rest = -r, r + s
        if rest > 0:
            # coev' on the left, then merge its plain leg into the input
            y = coevaluate(insert_trivial(x, pos), pos, -t)
            return multiply(y, pos + 1)
        if rest < 0:
            y = coevaluate(insert_trivial(x, pos + 1), pos + 1, -s)
            return dual_multiply(y, pos)
        return coevaluate(x, pos, -t)
    t, rest = -s, r + s
    if rest > 0:
        y = coevaluate(insert_trivial(x, pos + 1), pos + 1, t)
        return multiply(y, pos)
    if rest < 0:
        y = coevaluate(insert_trivial(x, pos), pos, r)
        return dual_multiply(y, pos + 1)
    return coevaluate(x, pos, r)


def loop_value(n: int, p: int) -> LaurentPoly:
    """ev after coev on V(p): the closed loop labelled p."""
    start = SubsetBasisVector.basis(n, (0,), (frozenset(),))
    closed = evaluate_pairing(coevaluate(start, 0, p), 0)
    return closed.coefficient((frozenset(),))


# ---------------------------------------------------------------------------
# the same maps on single basis tensors

LocalResult = Optional[Tuple[Subset, LaurentPoly]]


def merge_image(n: int, r: int, s: int, A: Subset, B: Subset) -> LocalResult:
    """Image of the basis tensor (A, B) under merge_map(r, s): one subset and its coefficient, or None."""
    A, B = frozenset(A), frozenset(B)
    if r == 0:
        return B, ONE
    if s == 0:
        return A, ONE
    if (r > 0) == (s > 0):
        if A & B:
            return None
        c = merge_coefficient(A, B) if r > 0 else dual_merge_coefficient(A, B)
        return A | B, c
    if r > 0:
        t = -s
        if r > t:
            return (A - B, split_coefficient(A - B, B) * ev_coefficient(n, B)) if B <= A else None
        if r < t:
            return (B - A, dual_split_coefficient(A, B - A) * ev_coefficient(n, A)) if A <= B else None
        return (frozenset(), ev_coefficient(n, A)) if A == B else None
    t = -r
    if t > s:
        return (A - B, dual_split_coefficient(A - B, B) * ev_dual_coefficient(n, B)) if B <= A else None
    if t < s:
        return (B - A, split_coefficient(A, B - A) * ev_dual_coefficient(n, A)) if A <= B else None
    return (frozenset(), ev_dual_coefficient(n, A)) if A == B else None


@lru_cache(maxsize=None)
def _merge_preimage_table(n: int, r: int, s: int):
    table: Dict[Subset, List[Tuple[Tuple[Subset, Subset], LaurentPoly]]] = {}
    for A in subsets(n, abs(r)):
        for B in subsets(n, abs(s)):
            image = merge_image(n, r, s, A, B)
            if image is not None:
                table.setdefault(image[0], []).append(((A, B), image[1]))
    return table


def merge_preimages(n: int, r: int, s: int, C: Subset) -> List[Tuple[Tuple[Subset, Subset], LaurentPoly]]:
    """All basis tensors sent to a multiple of C by merge_map(r, s), with coefficients."""
    _check_label(n, r)
    _check_label(n, s)
    _check_label(n, r + s)
    return list(_merge_preimage_table(n, r, s).get(frozenset(C), ()))


def split_preimage(n: int, r: int, s: int, X: Subset, Y: Subset) -> LocalResult:
    """The subset C whose image under split_map(r, s) contains (X, Y), with that coefficient."""
    X, Y = frozenset(X), frozenset(Y)
    if r == 0:
        return Y, ONE
    if s == 0:
        return X, ONE
    if (r > 0) == (s > 0):
        if X & Y:
            return None
        c = split_coefficient(X, Y) if r > 0 else dual_split_coefficient(X, Y)
        return X | Y, c
    rest = r + s
    if r < 0:
        if rest > 0:
            return (Y - X, coev_dual_coefficient(n, X) * merge_coefficient(X, Y - X)) if X <= Y else None
        if rest < 0:
            return (X - Y, coev_dual_coefficient(n, Y) * dual_merge_coefficient(X - Y, Y)) if Y <= X else None
        return (frozenset(), coev_dual_coefficient(n, X)) if X == Y else None
    if rest > 0:
        return (X - Y, coev_coefficient(n, Y) * merge_coefficient(X - Y, Y)) if Y <= X else None
    if rest < 0:
        return (Y - X, coev_coefficient(n, X) * dual_merge_coefficient(X, Y - X)) if X <= Y else None
    return (frozenset(), coev_coefficient(n, X)) if X == Y else None


# ---------------------------------------------------------------------------
# weights and extremal vectors

def weight_of(v: SubsetIndex) -> GlWeight:
    sign = -1 if v.dual else 1
    return GlWeight(coords=tuple(sign if i in v.members else 0 for i in range(1, v.n + 1)))


def key_weight(n: int, slots: Sequence[int], key: Key) -> GlWeight:
    """Total weight of one tensor basis element."""
    total = GlWeight.zero(n)
    for part, label in zip(key, slots):
        total = total + weight_of(SubsetIndex(n=n, members=part, dual=label < 0))
    return total


def highest_vector(n: int, p: int) -> SubsetIndex:
    if p < 0 or p > n:
        raise RankError(f"label {p} outside 0..{n}")
    return SubsetIndex(n=n, members=frozenset(range(1, p + 1)))


def lowest_vector(n: int, p: int) -> SubsetIndex:
    if p < 0 or p > n:
        raise RankError(f"label {p} outside 0..{n}")
    return SubsetIndex(n=n, members=frozenset(range(n - p + 1, n + 1)))


def lowest_dual_vector(n: int, p: int) -> SubsetIndex:
    """Lowest weight vector of V-bar(p), the vector placed on dual boundary edges."""
    if p < 0 or p > n:
        raise RankError(f"label {p} outside 0..{n}")
    return SubsetIndex(n=n, members=frozenset(range(1, p + 1)), dual=True)


# ---------------------------------------------------------------------------
# relation suite

def _relation_test_vectors(n: int) -> List[SubsetBasisVector]:
    vectors = []
    for p in range(n + 1):
        for I in subsets(n, p):
            vectors.append(SubsetBasisVector.basis(n, (p,), (I,)))
            vectors.append(SubsetBasisVector.basis(n, (-p,), (I,)))
    # two-factor tensors exercise the comultiplication
    for I in subsets(n, 1):
        for J in subsets(n, 1):
            vectors.append(SubsetBasisVector.basis(n, (1, -1), (I, J)))
            vectors.append(SubsetBasisVector.basis(n, (-1, 1), (I, J)))
    return vectors


def _cartan(i: int, j: int) -> int:
    """<e_i, alpha_j> with alpha_j = e_j - e_{j+1}."""
    return (1 if i == j else 0) - (1 if i == j + 1 else 0)


def verify_hopf_relations(n: int, mutate: bool = False) -> SuiteReport:
    """Check the defining relations as operator identities on basis vectors of both exterior algebras.

    With ``mutate`` the right side of the [E_i, F_j] relation is sign-flipped,
    which must produce failures.
    """
    if n < 1:
        raise RankError(f"rank must be positive, got {n}")
    if n > settings.MAX_RELATION_RANK:
        raise ScaleGuardError(f"relation suite limited to n <= {settings.MAX_RELATION_RANK}, got {n}")
    logger.info(f"Verifying quantum group relations for n={n}{' (mutated)' if mutate else ''}")
    report = SuiteReport(suite=f"relations n={n}")
    vectors = _relation_test_vectors(n)
    q_minus = q_power(1) - q_power(-1)
    two = qinteger(2)

    def E(i):
        return lambda v: act_E(i, v)

    def F(i):
        return lambda v: act_F(i, v)

    def K(i, sign=1):
        return lambda v: act_K(i, sign, v)

    def run(ops, v):
        for op in reversed(ops):
            v = op(v)
        return v

    def check(name, lhs, rhs):
        for v in vectors:
            left, right = lhs(v), rhs(v)
            if left != right:
                report.add(name, False, f"on {v}: {left} != {right}")
                return
        report.add(name, True)

    for i in range(1, n + 1):
        check(f"K{i}K{i}^-1 = 1", lambda v, i=i: run([K(i), K(i, -1)], v), lambda v: v)
        check(f"K{i}^-1K{i} = 1", lambda v, i=i: run([K(i, -1), K(i)], v), lambda v: v)
        for j in range(i + 1, n + 1):
            check(f"K{i}K{j} = K{j}K{i}", lambda v, i=i, j=j: run([K(i), K(j)], v),
                  lambda v, i=i, j=j: run([K(j), K(i)], v))
        for j in range(1, n):
            c = q_power(_cartan(i, j))
            check(f"K{i}E{j}K{i}^-1", lambda v, i=i, j=j: run([K(i), E(j), K(i, -1)], v),
                  lambda v, j=j, c=c: act_E(j, v).scale(c))
            c = q_power(-_cartan(i, j))
            check(f"K{i}F{j}K{i}^-1", lambda v, i=i, j=j: run([K(i), F(j), K(i, -1)], v),
                  lambda v, j=j, c=c: act_F(j, v).scale(c))
    sign = LaurentPoly.constant(-1 if mutate else 1)
    for i in range(1, n):
        for j in range(1, n):
            def commutator(v, i=i, j=j):
                return (run([E(i), F(j)], v) - run([F(j), E(i)], v)).scale(q_minus)

            def right(v, i=i, j=j):
                if i != j:
                    return SubsetBasisVector.zero(v.n, v.slots)
                return (run([K(i), K(i + 1, -1)], v) - run([K(i, -1), K(i + 1)], v)).scale(sign)
            check(f"[E{i},F{j}]", commutator, right)
            if abs(i - j) >= 2:
                check(f"E{i}E{j} = E{j}E{i}", lambda v, i=i, j=j: run([E(i), E(j)], v),
                      lambda v, i=i, j=j: run([E(j), E(i)], v))
                check(f"F{i}F{j} = F{j}F{i}", lambda v, i=i, j=j: run([F(i), F(j)], v),
                      lambda v, i=i, j=j: run([F(j), F(i)], v))
            if abs(i - j) == 1:
                for name, G in (("E", E), ("F", F)):
                    def serre(v, i=i, j=j, G=G):
                        return (run([G(i), G(i), G(j)], v) - run([G(i), G(j), G(i)], v).scale(two)
                                + run([G(j), G(i), G(i)], v))
                    check(f"Serre {name}{i}{name}{j}", serre, lambda v: SubsetBasisVector.zero(v.n, v.slots))
    if report.passed:
        logger.info(f"All {len(report.checks)} relations hold for n={n}")
    else:
        logger.warning(f"{len(report.failures)} relation checks failed for n={n}")
    return report

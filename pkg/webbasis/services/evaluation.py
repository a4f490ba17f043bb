"""State sums and the slice evaluator for grown flow diagrams."""
import logging
import threading
from itertools import product
from typing import Callable, Dict, FrozenSet, Hashable, Iterable, List, Optional, Sequence, Tuple

from pydantic import BaseModel

from webbasis.models.diagram import Cell, FlowDiagram, Vertex
from webbasis.models.vectors import SubsetBasisVector
from webbasis.models.word import Word
from webbasis.services import exterior
from webbasis.services.errors import SlotMismatchError
from webbasis.services.growth import grow
from webbasis.services.qint import ONE, ZERO, LaurentPoly, is_unit
from webbasis.services.words import enumerate_words, type_of, weight_of_word, word_key

logger = logging.getLogger(__name__)

Subset = FrozenSet[int]
Frontier = Tuple[Tuple[Subset, Subset], ...]


class BoundaryConditions(BaseModel):
    """Subsets fixed on the boundary edges; zero-labelled edges get the empty set."""
    oa: Tuple[FrozenSet[int], ...]
    ob: Tuple[FrozenSet[int], ...]
    top: Tuple[FrozenSet[int], ...]

    class Config:
        frozen = True


class StateSumCache:
    """Write-once cache of state sums keyed by (n, w, x); duplicated work stores equal values."""

    def __init__(self):
        self._values: Dict[Hashable, LaurentPoly] = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def get_or_compute(self, key: Hashable, compute: Callable[[], LaurentPoly]) -> LaurentPoly:
        with self._lock:
            if key in self._values:
                self.hits += 1
                return self._values[key]
        value = compute()
        with self._lock:
            self.misses += 1
            self._values.setdefault(key, value)
        return value

    def __len__(self) -> int:
        return len(self._values)

    def clear(self) -> None:
        with self._lock:
            self._values.clear()


_default_cache = StateSumCache()


def local_heft(n: int, vertex: Vertex, inputs: Sequence[Subset], outputs: Sequence[Subset]) -> LaurentPoly:
    """Heft of one vertex, cup or cap under a state.

    Merges and caps use the merge map on their inputs, splits and cups the
    split map on their outputs; an inconsistent state raises ValueError.
    """
    if vertex.kind in ('merge', 'cap'):
        r, s = vertex.inputs
        A, B = inputs
        image = exterior.merge_image(n, r, s, A, B)
        expected = frozenset(outputs[0]) if outputs else frozenset()
    else:
        r, s = vertex.outputs
        X, Y = outputs
        image = exterior.split_preimage(n, r, s, X, Y)
        expected = frozenset(inputs[0]) if inputs else frozenset()
    if image is None or image[0] != expected:
        raise ValueError(f"state {list(inputs)} -> {list(outputs)} is invalid at {vertex}")
    heft = image[1]
    if not is_unit(heft):
        raise ArithmeticError(f"heft {heft} at {vertex} is not a unit")
    return heft


def boundary_conditions(d: FlowDiagram, x: Word) -> BoundaryConditions:
    """Highest weight subsets on OA, {1..m} on OB and the singletons of x on the top."""
    if type_of(x) != type_of(d.word):
        raise SlotMismatchError(f"word {x} does not have the type {type_of(d.word)} of {d.word}")
    return BoundaryConditions(
        oa=tuple(frozenset(range(1, p + 1)) for p in d.oa_edges),
        ob=tuple(frozenset(range(1, -m + 1)) for m in d.ob_edges),
        top=tuple(frozenset([letter.value]) for letter in x.letters),
    )


def cell_transitions(n: int, cell: Cell, X: Subset, Y: Subset) -> List[Tuple[Tuple[Subset, Subset], LaurentPoly]]:
    """Bottom states (sw, se) of a cell given its top states, with the cell's heft.

    For letter cells X is the strand subset and Y is ignored.
    """
    if cell.kind == 'letter':
        rung, above = X, ONE
    else:
        found = exterior.split_preimage(n, cell.x, cell.y, X, Y)
        if found is None:
            return []
        rung, above = found
    return [(pair, above * below) for pair, below in exterior.merge_preimages(n, cell.sw, cell.se, rung)]


def _signed_weight(n: int, plus: Iterable[Subset], minus: Iterable[Subset]) -> Tuple[int, ...]:
    coords = [0] * n
    for part in plus:
        for k in part:
            coords[k - 1] += 1
    for part in minus:
        for k in part:
            coords[k - 1] -= 1
    return tuple(coords)


def owed_weights(n: int, bc: BoundaryConditions) -> List[Tuple[int, ...]]:
    """Weight still to leave through OA and OB below each row."""
    return [_signed_weight(n, bc.oa[i + 1:], bc.ob[i + 1:]) for i in range(len(bc.oa))]


def within_capacity(n: int, state: Frontier, owed: Tuple[int, ...]) -> bool:
    """Open edges of a frontier must carry exactly the weight still owed to OA and OB."""
    plus = [pair[0] for pair in state[1:]]
    minus = [pair[1] for pair in state[:-1]]
    return _signed_weight(n, plus, minus) == owed


def _sweep(d: FlowDiagram, bc: BoundaryConditions, counting: bool) -> Dict[Frontier, object]:
    """Top-down frontier sweep; returns the final frontier table."""
    n, r = d.n, d.r
    zero = 0 if counting else ZERO
    owed = owed_weights(n, bc)
    frontier: Dict[Frontier, object] = {(): 1 if counting else ONE}
    for i in range(r):
        row = d.row(i)
        nxt: Dict[Frontier, object] = {}
        for state, weight in frontier.items():
            options = []
            for j, cell in enumerate(row):
                if i == 0:
                    X, Y = bc.top[j], frozenset()
                else:
                    X, Y = state[j][1], state[j + 1][0]
                choices = cell_transitions(n, cell, X, Y)
                if j == 0:
                    choices = [c for c in choices if c[0][0] == bc.oa[i]]
                if j == len(row) - 1:
                    choices = [c for c in choices if c[0][1] == bc.ob[i]]
                if not choices:
                    options = None
                    break
                options.append(choices)
            if options is None:
                continue
            for combo in product(*options):
                key = tuple(pair for pair, _ in combo)
                value = weight
                for _, heft in combo:
                    value = value * (1 if counting else heft)
                nxt[key] = nxt.get(key, zero) + value
        frontier = {k: v for k, v in nxt.items() if v and within_capacity(n, k, owed[i])}
        if len(frontier) < len(nxt):
            logger.debug(f"Row {i}: pruned {len(nxt) - len(frontier)} of {len(nxt)} frontier states")
        if not frontier:
            break
    return frontier


def state_sum(d: FlowDiagram, x: Word) -> LaurentPoly:
    """A^w_x: the sum over completing states of the product of local hefts."""
    bc = boundary_conditions(d, x)
    if d.r == 0:
        return ONE
    final = _sweep(d, bc, counting=False)
    return sum(final.values(), ZERO)


def count_states(d: FlowDiagram, x: Word) -> int:
    """Number of states completing the boundary conditions of x."""
    bc = boundary_conditions(d, x)
    if d.r == 0:
        return 1
    return int(sum(_sweep(d, bc, counting=True).values()))


def tensor_key(x: Word) -> Tuple[Subset, ...]:
    return tuple(frozenset([letter.value]) for letter in x.letters)


def key_to_word(key: Sequence[Subset], slots: Sequence[int]) -> Word:
    labels = []
    for part, label in zip(key, slots):
        (value,) = part
        labels.append(-value if label < 0 else value)
    return Word.from_z(labels)


def evaluate_vector(w: Word, n: int, cache: Optional[StateSumCache] = None) -> SubsetBasisVector:
    """Sum of A^w_x times the tensor basis vector of x over all x of the type and weight of w."""
    cache = cache if cache is not None else _default_cache
    d = grow(w, n)
    slots = tuple(-1 if letter.barred else 1 for letter in w.letters)
    terms = {}
    for x in enumerate_words(len(w), n, type_of(w), weight_of_word(w, n)):
        value = cache.get_or_compute((n, w.z, x.z), lambda x=x: state_sum(d, x))
        if value:
            terms[tensor_key(x)] = value
    return SubsetBasisVector(n, slots, terms)


def coefficients(w: Word, n: int, cache: Optional[StateSumCache] = None) -> List[Tuple[Word, LaurentPoly]]:
    """Nonzero coefficients of evaluate_vector as (x, A^w_x), lex-sorted by x."""
    v = evaluate_vector(w, n, cache)
    pairs = [(key_to_word(key, v.slots), coeff) for key, coeff in v.terms.items()]
    return sorted(pairs, key=lambda pair: word_key(pair[0]))


def slice_evaluate(w: Word, n: int) -> SubsetBasisVector:
    """Evaluate by composing the cell maps row by row from the boundary upwards."""
    d = grow(w, n)
    r = d.r
    if r == 0:
        return SubsetBasisVector.basis(n, (), ())
    oa, ob = d.oa_edges, d.ob_edges
    slots = list(oa) + list(reversed(ob))
    key = [frozenset(range(1, p + 1)) for p in oa] + [frozenset(range(1, -m + 1)) for m in reversed(ob)]
    v = SubsetBasisVector.basis(n, slots, key)
    for i in range(r - 1, 0, -1):
        for j, cell in enumerate(d.row(i)):
            pos = i + 2 * j
            v = exterior.merge_map(cell.sw, cell.se, v, pos)
            v = exterior.split_map(cell.x, cell.y, v, pos)
    for j, cell in enumerate(d.row(0)):
        v = exterior.merge_map(cell.sw, cell.se, v, j)
    logger.debug(f"Slice evaluation of {w} at n={n} has {len(v.terms)} terms")
    return v

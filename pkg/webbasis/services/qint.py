"""Exact arithmetic in Z[q, q^-1] plus q-integers and balanced q-binomials."""
import logging
import re
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

logger = logging.getLogger(__name__)

Scalar = Union[int, "LaurentPoly"]

_TERM_RE = re.compile(r"^([+-]?\d*)(\*?q(\^(-?\d+))?)?$")


class LaurentPoly:
    """Immutable element of Z[q, q^-1] stored as a sparse exponent -> coefficient map."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping[int, int], Iterable[Tuple[int, int]], None] = None):
        collected: Dict[int, int] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for exponent, coeff in items:
                collected[int(exponent)] = collected.get(int(exponent), 0) + int(coeff)
        self._terms: Tuple[Tuple[int, int], ...] = tuple(
            sorted(((e, c) for e, c in collected.items() if c != 0), reverse=True)
        )
        self._hash = hash(self._terms)

    # constructors

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exponent: coeff})

    @classmethod
    def coerce(cls, value: Scalar) -> "LaurentPoly":
        if isinstance(value, LaurentPoly):
            return value
        if isinstance(value, int):
            return cls.constant(value)
        raise TypeError(f"cannot coerce {type(value).__name__} to LaurentPoly")

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """Parse the textual form produced by ``str``."""
        compact = text.replace(" ", "")
        if compact in ("", "0"):
            return ZERO
        # split before every sign that is not an exponent sign
        pieces = re.split(r"(?<!\^)(?=[+-])", compact)
        terms: Dict[int, int] = {}
        for piece in pieces:
            if not piece:
                continue
            match = _TERM_RE.match(piece)
            if match is None:
                raise ValueError(f"invalid Laurent polynomial term: {piece!r}")
            coeff_text, q_part, _, exp_text = match.groups()
            if coeff_text in ("", "+"):
                coeff = 1
            elif coeff_text == "-":
                coeff = -1
            else:
                coeff = int(coeff_text)
            if q_part is None:
                exponent = 0
            else:
                exponent = int(exp_text) if exp_text is not None else 1
            terms[exponent] = terms.get(exponent, 0) + coeff
        return cls(terms)

    # inspection

    @property
    def terms(self) -> Dict[int, int]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[int, int]]:
        return iter(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree_span(self) -> Tuple[int, int]:
        if not self._terms:
            raise ValueError("zero polynomial has no degree span")
        return self._terms[-1][0], self._terms[0][0]

    # arithmetic

    def __add__(self, other: Scalar) -> "LaurentPoly":
        other = LaurentPoly.coerce(other)
        return LaurentPoly(list(self._terms) + list(other._terms))

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly((e, -c) for e, c in self._terms)

    def __sub__(self, other: Scalar) -> "LaurentPoly":
        return self + (-LaurentPoly.coerce(other))

    def __rsub__(self, other: Scalar) -> "LaurentPoly":
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other: Scalar) -> "LaurentPoly":
        other = LaurentPoly.coerce(other)
        product: Dict[int, int] = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                product[e1 + e2] = product.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(product)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if not is_unit(self):
                raise ValueError("only units have negative powers in Z[q, q^-1]")
            (exponent, coeff), = self._terms
            return LaurentPoly.monomial(-exponent * -k, coeff if k % 2 else 1)
        result = ONE
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for index, (exponent, coeff) in enumerate(self._terms):
            sign = "-" if coeff < 0 else "+"
            magnitude = abs(coeff)
            if exponent == 0:
                body = str(magnitude)
            else:
                power = "q" if exponent == 1 else f"q^{exponent}"
                body = power if magnitude == 1 else f"{magnitude}*{power}"
            if index == 0:
                out.append(body if sign == "+" else f"-{body}")
            else:
                out.append(f" {sign} {body}")
        return "".join(out)


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
Q = LaurentPoly.monomial(1)


def add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def bar(a: LaurentPoly) -> LaurentPoly:
    """Bar involution q -> q^-1."""
    return LaurentPoly((-e, c) for e, c in a.items())


def is_unit(a: LaurentPoly) -> bool:
    """True iff a = +-q^k."""
    terms = a.terms
    return len(terms) == 1 and abs(next(iter(terms.values()))) == 1


def q_power(k: int) -> LaurentPoly:
    return LaurentPoly.monomial(k)


def minus_q_power(k: int) -> LaurentPoly:
    """(-q)^k for any integer k."""
    return LaurentPoly.monomial(k, -1 if k % 2 else 1)


def specialize(a: LaurentPoly, value: Union[int, Fraction]) -> Fraction:
    """Evaluate at q = value; value must be nonzero when negative exponents occur."""
    total = Fraction(0)
    for exponent, coeff in a.items():
        total += coeff * Fraction(value) ** exponent
    return total


def qinteger(m: int) -> LaurentPoly:
    """Balanced q-integer [m] = q^(m-1) + q^(m-3) + ... + q^(1-m)."""
    if m < 0:
        return -qinteger(-m)
    return LaurentPoly({m - 1 - 2 * k: 1 for k in range(m)})


def qfactorial(m: int) -> LaurentPoly:
    if m < 0:
        raise ValueError(f"factorial of negative integer {m}")
    result = ONE
    for k in range(1, m + 1):
        result = result * qinteger(k)
    return result


def qbinomial(m: int, p: int) -> LaurentPoly:
    """Balanced Gaussian binomial, symmetric under bar."""
    if p < 0 or p > m:
        raise ValueError(f"qbinomial needs 0 <= p <= m, got m={m}, p={p}")
    # balanced q-Pascal rule, one row per size
    row = [ONE]
    for size in range(1, m + 1):
        nxt = []
        for k in range(size + 1):
            left = row[k - 1] if k >= 1 else ZERO
            right = row[k] if k < size else ZERO
            # [size, k] = q^(size-k) [size-1, k-1] + q^(-k) [size-1, k]
            nxt.append(q_power(size - k) * left + q_power(-k) * right)
        row = nxt
    return row[p]

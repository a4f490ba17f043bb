"""Subset-indexed basis vectors of the q-exterior algebra and their tensor products."""
from typing import Dict, FrozenSet, Iterable, Iterator, Mapping, Optional, Tuple

from pydantic import BaseModel, root_validator

from webbasis.services.qint import ZERO, LaurentPoly

Key = Tuple[FrozenSet[int], ...]


class SubsetIndex(BaseModel):
    """Model for a basis vector v_I (dual=False) or v-bar_I (dual=True) of rank n."""
    n: int
    members: FrozenSet[int] = frozenset()
    dual: bool = False

    class Config:
        frozen = True

    @root_validator(skip_on_failure=True)
    def validate_members(cls, values):
        n = values.get('n')
        members = values.get('members', frozenset())
        if n is None or n < 1:
            raise ValueError('Rank n must be a positive integer')
        if any(i < 1 or i > n for i in members):
            raise ValueError(f'Members must lie in 1..{n}')
        return values

    @property
    def label(self) -> int:
        return -len(self.members) if self.dual else len(self.members)

    def __str__(self) -> str:
        return format_subset(self.members, self.dual)


def format_subset(members: Iterable[int], dual: bool) -> str:
    body = ",".join(str(i) for i in sorted(members))
    return f"vb{{{body}}}" if dual else f"v{{{body}}}"


class SubsetBasisVector:
    """Formal Z[q, q^-1]-combination of tensors of subset basis vectors.

    ``slots`` holds one Z-label per tensor factor: p > 0 is V(p), -p is the
    dual V-bar(p), 0 is the trivial factor V(0) (only the empty subset).
    """

    __slots__ = ("n", "slots", "_terms")

    def __init__(self, n: int, slots: Iterable[int], terms: Optional[Mapping[Key, LaurentPoly]] = None):
        self.n = n
        self.slots: Tuple[int, ...] = tuple(slots)
        cleaned: Dict[Key, LaurentPoly] = {}
        for key, coeff in (terms or {}).items():
            key = tuple(frozenset(part) for part in key)
            self._check_key(key)
            total = cleaned.get(key, ZERO) + coeff
            if total.is_zero():
                cleaned.pop(key, None)
            else:
                cleaned[key] = total
        self._terms = cleaned

    def _check_key(self, key: Key) -> None:
        if len(key) != len(self.slots):
            raise ValueError(f"key {key} does not match {len(self.slots)} slots")
        for part, label in zip(key, self.slots):
            if len(part) != abs(label) or any(i < 1 or i > self.n for i in part):
                raise ValueError(f"subset {sorted(part)} does not fit slot label {label} at rank {self.n}")

    @classmethod
    def basis(cls, n: int, slots: Iterable[int], key: Iterable[Iterable[int]]) -> "SubsetBasisVector":
        from webbasis.services.qint import ONE
        return cls(n, slots, {tuple(frozenset(k) for k in key): ONE})

    @classmethod
    def zero(cls, n: int, slots: Iterable[int]) -> "SubsetBasisVector":
        return cls(n, slots, {})

    @property
    def terms(self) -> Dict[Key, LaurentPoly]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Key, LaurentPoly]]:
        return iter(sorted(self._terms.items(), key=lambda kv: _sort_key(kv[0])))

    def coefficient(self, key: Iterable[Iterable[int]]) -> LaurentPoly:
        return self._terms.get(tuple(frozenset(k) for k in key), ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def normalized(self) -> "SubsetBasisVector":
        """Drop trivial slots (label 0)."""
        keep = [i for i, label in enumerate(self.slots) if label != 0]
        return SubsetBasisVector(
            self.n,
            [self.slots[i] for i in keep],
            {tuple(key[i] for i in keep): c for key, c in self._terms.items()},
        )

    def scale(self, c: LaurentPoly) -> "SubsetBasisVector":
        return SubsetBasisVector(self.n, self.slots, {k: v * c for k, v in self._terms.items()})

    def __add__(self, other: "SubsetBasisVector") -> "SubsetBasisVector":
        if other.slots != self.slots or other.n != self.n:
            raise ValueError("cannot add vectors with different slot signatures")
        merged: Dict[Key, LaurentPoly] = dict(self._terms)
        for key, coeff in other._terms.items():
            merged[key] = merged.get(key, ZERO) + coeff
        return SubsetBasisVector(self.n, self.slots, merged)

    def __sub__(self, other: "SubsetBasisVector") -> "SubsetBasisVector":
        return self + other.scale(LaurentPoly.constant(-1))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SubsetBasisVector):
            return NotImplemented
        return self.n == other.n and self.slots == other.slots and self._terms == other._terms

    def __repr__(self) -> str:
        return f"SubsetBasisVector(n={self.n}, slots={self.slots}, {str(self)!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for index, (key, coeff) in enumerate(self.items()):
            factors = "(x)".join(format_subset(part, label < 0) for part, label in zip(key, self.slots))
            sign = "+"
            if len(coeff.terms) == 1 and next(coeff.items())[1] < 0:
                sign, coeff = "-", -coeff
            if coeff == LaurentPoly.constant(1):
                body = factors
            elif len(coeff.terms) == 1:
                body = f"{coeff}*{factors}"
            else:
                body = f"({coeff})*{factors}"
            if index == 0:
                out.append(body if sign == "+" else f"-{body}")
            else:
                out.append(f" {sign} {body}")
        return "".join(out)


def _sort_key(key: Key):
    return tuple(tuple(sorted(part)) for part in key)

"""Models for letters, words, types and gl(n) weights."""
from typing import Tuple

from pydantic import BaseModel, validator


class Letter(BaseModel):
    """A letter a or a-bar of the alphabet {1, 1', 2, 2', ...}."""
    value: int
    barred: bool = False

    class Config:
        frozen = True

    @validator('value')
    def validate_value(cls, v):
        if v < 1:
            raise ValueError('Letter value must be a positive integer')
        return v

    @classmethod
    def from_z(cls, z: int) -> "Letter":
        if z == 0:
            raise ValueError('0 marks an absent edge, not a letter')
        return cls(value=abs(z), barred=z < 0)

    @property
    def z_label(self) -> int:
        return -self.value if self.barred else self.value

    @property
    def sign(self) -> str:
        return '-' if self.barred else '+'

    def __str__(self) -> str:
        return f"{self.value}'" if self.barred else str(self.value)


class Word(BaseModel):
    """Model for a word; element of M^r(n)."""
    letters: Tuple[Letter, ...] = ()

    class Config:
        frozen = True

    @classmethod
    def from_z(cls, labels) -> "Word":
        return cls(letters=tuple(Letter.from_z(z) for z in labels))

    @property
    def z(self) -> Tuple[int, ...]:
        return tuple(letter.z_label for letter in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        if any(letter.value > 9 for letter in self.letters):
            return "[" + ",".join(str(z) for z in self.z) + "]"
        return "".join(str(letter) for letter in self.letters)


class TypeString(BaseModel):
    """Model for a type, a word in {+, -}."""
    signs: Tuple[str, ...] = ()

    class Config:
        frozen = True

    @validator('signs')
    def validate_signs(cls, v):
        for s in v:
            if s not in ('+', '-'):
                raise ValueError(f'Type symbols must be + or -, got {s!r}')
        return tuple(v)

    @classmethod
    def parse(cls, text: str) -> "TypeString":
        return cls(signs=tuple(text.strip()))

    def __len__(self) -> int:
        return len(self.signs)

    def __str__(self) -> str:
        return "".join(self.signs)


class GlWeight(BaseModel):
    """Model for a gl(n) weight."""
    coords: Tuple[int, ...]

    class Config:
        frozen = True

    @validator('coords')
    def validate_coords(cls, v):
        if len(v) < 1:
            raise ValueError('A weight needs at least one coordinate')
        return tuple(v)

    @classmethod
    def zero(cls, n: int) -> "GlWeight":
        return cls(coords=(0,) * n)

    @property
    def n(self) -> int:
        return len(self.coords)

    def __add__(self, other: "GlWeight") -> "GlWeight":
        return GlWeight(coords=tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "GlWeight") -> "GlWeight":
        return GlWeight(coords=tuple(a - b for a, b in zip(self.coords, other.coords)))

    def is_dominant(self) -> bool:
        return all(a >= b for a, b in zip(self.coords, self.coords[1:]))

    def is_trivial(self) -> bool:
        """True for multiples of the determinant weight (1, ..., 1)."""
        return len(set(self.coords)) == 1

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coords) + ")"

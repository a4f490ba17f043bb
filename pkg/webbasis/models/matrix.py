"""Models for the coefficient matrix A of a block of words."""
from typing import Dict, Iterator, List, Optional, Tuple

from pydantic import BaseModel

from webbasis.models.word import Word
from webbasis.services.qint import ZERO, LaurentPoly


class MatrixEntry(BaseModel):
    """One nonzero entry A^w_x in exported form."""
    row_word: str
    col_word: str
    poly: str

    class Config:
        frozen = True


class BasisMatrix:
    """Square array of Laurent polynomials indexed by (w, x) over lex-ordered words.

    Only nonzero entries are stored; rows are w, columns are x.
    """

    def __init__(self, n: int, words: List[Word], entries: Optional[Dict[Tuple[Word, Word], LaurentPoly]] = None):
        self.n = n
        self.words = list(words)
        self._index = {w: k for k, w in enumerate(self.words)}
        self.entries: Dict[Tuple[Word, Word], LaurentPoly] = {}
        for (w, x), value in (entries or {}).items():
            if w not in self._index or x not in self._index:
                raise KeyError(f"entry ({w}, {x}) is outside the index set")
            if value:
                self.entries[(w, x)] = value

    def __len__(self) -> int:
        return len(self.words)

    def index(self, w: Word) -> int:
        return self._index[w]

    def entry(self, w: Word, x: Word) -> LaurentPoly:
        return self.entries.get((w, x), ZERO)

    def row(self, w: Word) -> Dict[Word, LaurentPoly]:
        return {x: v for (row, x), v in self.entries.items() if row == w}

    def nonzero(self) -> Iterator[Tuple[Word, Word, LaurentPoly]]:
        for (w, x) in sorted(self.entries, key=lambda pair: (self._index[pair[0]], self._index[pair[1]])):
            yield w, x, self.entries[(w, x)]

    def records(self) -> List[MatrixEntry]:
        return [MatrixEntry(row_word=str(w), col_word=str(x), poly=str(v)) for w, x, v in self.nonzero()]

    def with_entry(self, w: Word, x: Word, value: LaurentPoly) -> "BasisMatrix":
        """Copy with one entry replaced."""
        entries = dict(self.entries)
        entries[(w, x)] = value
        return BasisMatrix(self.n, self.words, entries)

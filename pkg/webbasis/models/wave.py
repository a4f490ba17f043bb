"""Models for pages, books and closed wave graphs."""
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, validator


class Page(BaseModel):
    """Page i of a word: i -> 1, i+1 -> 2, everything else -> 0."""
    index: int
    word: Tuple[int, ...]

    class Config:
        frozen = True

    @validator('index')
    def validate_index(cls, v):
        if v < 1:
            raise ValueError('Page index must be positive')
        return v

    @validator('word')
    def validate_word(cls, v):
        if any(c not in (0, 1, 2) for c in v):
            raise ValueError('Page words use the alphabet {0, 1, 2}')
        return tuple(v)

    def __str__(self) -> str:
        return "".join(str(c) for c in self.word)


class PageArcs(BaseModel):
    """Bracket matching of one page; positions are 0-based."""
    index: int
    arcs: Tuple[Tuple[int, int], ...] = ()
    open_ends: Tuple[int, ...] = ()

    class Config:
        frozen = True

    @property
    def closed(self) -> bool:
        return not self.open_ends


class WaveBook(BaseModel):
    """Pages bound along a common spine of letter positions."""
    length: int
    pages: Tuple[PageArcs, ...]

    class Config:
        frozen = True

    def spine(self) -> Dict[int, List[int]]:
        """Position -> indices of the pages with an arc end at that position."""
        ends: Dict[int, List[int]] = {p: [] for p in range(self.length)}
        for page in self.pages:
            for a, b in page.arcs:
                ends[a].append(page.index)
                ends[b].append(page.index)
            for a in page.open_ends:
                ends[a].append(page.index)
        return ends


def interleaving_pattern(blocks: Tuple[Tuple[int, ...], ...]) -> Optional[Tuple[int, int, int]]:
    """First (a, r, s) with block r's a-th and (a+1)-th entries interleaving block s's, or None."""
    for a in range(len(blocks[0]) - 1 if blocks else 0):
        for r, first in enumerate(blocks):
            for s, second in enumerate(blocks):
                if r != s and first[a] < second[a] < first[a + 1] < second[a + 1]:
                    return a, r, s
    return None


class ClosedWaveGraph(BaseModel):
    """Partition of {1..total} into equal sorted blocks without interleaving."""
    total: int
    blocks: Tuple[Tuple[int, ...], ...]

    class Config:
        frozen = True

    @validator('blocks')
    def validate_blocks(cls, v, values):
        blocks = tuple(sorted(tuple(sorted(block)) for block in v))
        total = values.get('total')
        if len({len(block) for block in blocks}) > 1:
            raise ValueError('Blocks must have equal sizes')
        if total is not None and sorted(i for block in blocks for i in block) != list(range(1, total + 1)):
            raise ValueError(f'Blocks must partition 1..{total}')
        if interleaving_pattern(blocks) is not None:
            raise ValueError(f'Blocks {blocks} interleave')
        return blocks

    def __str__(self) -> str:
        return " ".join("{" + ",".join(str(i) for i in block) + "}" for block in self.blocks)

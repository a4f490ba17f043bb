"""Pages, books and closed wave graphs of words over {1..n}."""
import logging
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from webbasis.config import settings
from webbasis.models.wave import ClosedWaveGraph, Page, PageArcs, WaveBook, interleaving_pattern
from webbasis.models.word import Word
from webbasis.services.errors import RankError, ScaleGuardError
from webbasis.services.words import check_letters

logger = logging.getLogger(__name__)


def pages_of(w: Word, n: int) -> List[Page]:
    """The n-1 substitution words: page i sends i to 1, i+1 to 2 and the rest to 0."""
    if any(letter.barred for letter in w.letters):
        raise ValueError(f"pages are defined for words without bars, got {w}")
    check_letters(w, n)
    pages = []
    for i in range(1, n):
        pages.append(Page(index=i, word=tuple(1 if a == i else 2 if a == i + 1 else 0 for a in w.z)))
    return pages


def reconstruct(pages: Sequence[Page]) -> Word:
    """Recover the word from its pages."""
    if not pages:
        raise ValueError("at least one page is needed")
    length = len(pages[0].word)
    if any(len(page.word) != length for page in pages):
        raise ValueError("pages have different lengths")
    ordered = sorted(pages, key=lambda page: page.index)
    labels = []
    for pos in range(length):
        for page in ordered:
            value = page.word[pos]
            if value:
                labels.append(page.index if value == 1 else page.index + 1)
                break
        else:
            raise ValueError(f"position {pos} is blank on every page")
    return Word.from_z(labels)


def page_arcs(page: Page) -> PageArcs:
    """Match 1 as an opening and 2 as a closing bracket; 0 is skipped."""
    stack: List[int] = []
    arcs = []
    unmatched = []
    for pos, value in enumerate(page.word):
        if value == 1:
            stack.append(pos)
        elif value == 2:
            if stack:
                arcs.append((stack.pop(), pos))
            else:
                unmatched.append(pos)
    return PageArcs(index=page.index, arcs=tuple(sorted(arcs)), open_ends=tuple(sorted(unmatched + stack)))


def bind_book(pages: Sequence[Page]) -> WaveBook:
    if not pages:
        raise ValueError("at least one page is needed")
    length = len(pages[0].word)
    if any(len(page.word) != length for page in pages):
        raise ValueError("pages have different lengths")
    return WaveBook(length=length, pages=tuple(page_arcs(page) for page in sorted(pages, key=lambda p: p.index)))


def spine_degrees_ok(book: WaveBook) -> bool:
    """Every spine point ends one arc, or two arcs on adjacent pages."""
    for pos, indices in book.spine().items():
        if len(indices) == 1:
            continue
        if len(indices) == 2 and abs(indices[0] - indices[1]) == 1:
            continue
        return False
    return True


def closed_wave_of(w: Word, n: int) -> Optional[ClosedWaveGraph]:
    """Chain arcs across pages into blocks when every arc joins two spine points."""
    book = bind_book(pages_of(w, n))
    if not all(page.closed for page in book.pages):
        return None
    partner = {}
    for page in book.pages:
        for a, b in page.arcs:
            partner[(page.index, a)] = b
    blocks = []
    for start, letter in enumerate(w.z):
        if letter != 1:
            continue
        chain = [start]
        for index in range(1, n):
            chain.append(partner[(index, chain[-1])])
        blocks.append(tuple(p + 1 for p in chain))
    try:
        return ClosedWaveGraph(total=len(w), blocks=tuple(blocks))
    except ValueError as e:
        logger.debug(f"Word {w} chains into invalid blocks: {str(e)}")
        return None


def is_closed_wave_graph(total: int, blocks: Sequence[Sequence[int]]) -> bool:
    """Brute-force check of the partition, equal block size and non-interleaving conditions."""
    ordered = tuple(sorted(tuple(sorted(block)) for block in blocks))
    if sorted(i for block in ordered for i in block) != list(range(1, total + 1)):
        return False
    if len({len(block) for block in ordered}) > 1:
        return False
    return interleaving_pattern(ordered) is None


def _equal_partitions(elements: Tuple[int, ...], size: int):
    if not elements:
        yield ()
        return
    first, rest = elements[0], elements[1:]
    for others in combinations(rest, size - 1):
        remaining = tuple(e for e in rest if e not in others)
        for tail in _equal_partitions(remaining, size):
            yield ((first,) + others,) + tail


def enumerate_closed(n: int, k: int) -> List[ClosedWaveGraph]:
    """All closed wave graphs with k blocks of size n on {1..nk}."""
    if n < 1 or k < 1:
        raise RankError(f"n and k must be positive, got n={n}, k={k}")
    if n * k > settings.MAX_WAVE_SIZE:
        raise ScaleGuardError(f"nk = {n * k} exceeds the ceiling {settings.MAX_WAVE_SIZE}")
    found = []
    for blocks in _equal_partitions(tuple(range(1, n * k + 1)), n):
        if interleaving_pattern(blocks) is None:
            found.append(ClosedWaveGraph(total=n * k, blocks=blocks))
    logger.info(f"Enumerated {len(found)} closed wave graphs for n={n}, k={k}")
    return found


def closed_wave_to_word(g: ClosedWaveGraph) -> Word:
    """The a-th entry of every block carries the letter a."""
    labels = [0] * g.total
    for block in g.blocks:
        for a, pos in enumerate(block):
            labels[pos - 1] = a + 1
    return Word.from_z(labels)


def closed_wave_matrix(g: ClosedWaveGraph) -> List[List[int]]:
    """Blocks as the rows of the displayed matrix."""
    return [list(block) for block in g.blocks]


def closed_wave_to_tableau(g: ClosedWaveGraph) -> List[List[int]]:
    """Standard Young tableau whose row a holds the positions carrying letter a."""
    w = closed_wave_to_word(g)
    rows = [[] for _ in range(len(g.blocks[0]))] if g.blocks else []
    for pos, a in enumerate(w.z, start=1):
        rows[a - 1].append(pos)
    return rows


def lattice_words(n: int, k: int) -> List[Word]:
    """Words with k copies of each of 1..n whose prefixes never favour a larger letter."""
    found = []

    def extend(prefix: List[int], counts: List[int]):
        if len(prefix) == n * k:
            found.append(Word.from_z(prefix))
            return
        for a in range(n):
            if counts[a] < k and (a == 0 or counts[a - 1] > counts[a]):
                counts[a] += 1
                extend(prefix + [a + 1], counts)
                counts[a] -= 1

    extend([], [0] * n)
    return found

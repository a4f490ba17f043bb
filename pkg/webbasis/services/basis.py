"""Assembly of the coefficient matrix, the triangularity check and the sub-bases it yields."""
import csv
import io
import json
import logging
from collections import defaultdict
from typing import Dict, List, Optional, Tuple

from webbasis.config import settings
from webbasis.models.matrix import BasisMatrix
from webbasis.models.report import SuiteReport
from webbasis.models.word import GlWeight, TypeString, Word
from webbasis.services.errors import ScaleGuardError
from webbasis.services.evaluation import StateSumCache, coefficients
from webbasis.services.growth import boundary_weights, grow
from webbasis.services.qint import ONE, ZERO, LaurentPoly, is_unit
from webbasis.services.words import enumerate_words, lex_compare, type_of, weight_of_word

logger = logging.getLogger(__name__)


def _guard(count: int, max_words: Optional[int]) -> None:
    ceiling = settings.MAX_BLOCK_WORDS if max_words is None else max_words
    if count > ceiling:
        logger.warning(f"Block of {count} words exceeds the ceiling {ceiling}")
        raise ScaleGuardError(f"{count} words exceed the desk-scale ceiling of {ceiling}")


def assemble(r: int, n: int, u: Optional[TypeString] = None, weight: Optional[GlWeight] = None,
             max_words: Optional[int] = None, cache: Optional[StateSumCache] = None) -> BasisMatrix:
    """Rows A(w) for every word w of length r (optionally of type u and weight lambda)."""
    words = list(enumerate_words(r, n, u, weight))
    _guard(len(words), max_words)
    cache = cache if cache is not None else StateSumCache()
    index = set(words)
    blocks: Dict[Tuple, List[Word]] = defaultdict(list)
    for w in words:
        blocks[(type_of(w), weight_of_word(w, n))].append(w)
    logger.info(f"Assembling {len(words)} words of length {r} at n={n} in {len(blocks)} blocks")
    entries = {}
    try:
        for (block_type, block_weight), block in blocks.items():
            logger.debug(f"Block type={block_type} weight={block_weight}: {len(block)} words")
            for w in block:
                for x, value in coefficients(w, n, cache):
                    if x in index:
                        entries[(w, x)] = value
    except Exception as e:
        logger.error(f"Error assembling basis matrix for r={r}, n={n}: {str(e)}")
        raise
    return BasisMatrix(n, words, entries)


def verify_triangular(m: BasisMatrix) -> SuiteReport:
    """Report every entry above the diagonal and every diagonal entry that is not a unit."""
    report = SuiteReport(suite=f"triangularity n={m.n} ({len(m)} words)")
    for w, x, value in m.nonzero():
        if lex_compare(x, w) > 0:
            report.add(f"A[{w}][{x}]", False, f"nonzero entry {value} above the diagonal")
    for w in m.words:
        diagonal = m.entry(w, w)
        if not is_unit(diagonal):
            report.add(f"A[{w}][{w}]", False, f"diagonal entry {diagonal} is not a unit")
    if report.passed:
        report.add("lower triangular with unit diagonal", True)
    return report


def inverse_is_integral(m: BasisMatrix) -> Tuple[bool, Optional[BasisMatrix]]:
    """Invert A over Z[q, q^-1] by forward substitution and confirm A * A^-1 = 1."""
    words = m.words
    inverse: Dict[Tuple[Word, Word], LaurentPoly] = {}
    for k, w in enumerate(words):
        diagonal = m.entry(w, w)
        if not is_unit(diagonal):
            return False, None
        scale = diagonal ** -1
        row = m.row(w)
        for x in words[:k + 1]:
            total = ONE if x == w else ZERO
            for y, a in row.items():
                if y != w:
                    total = total - a * inverse.get((y, x), ZERO)
            if total:
                inverse[(w, x)] = scale * total
    result = BasisMatrix(m.n, words, inverse)
    for w in words:
        row = m.row(w)
        for x in words:
            product = sum((a * result.entry(y, x) for y, a in row.items()), ZERO)
            if product != (ONE if x == w else ZERO):
                return False, result
    return True, result


def is_invariant_word(w: Word, n: int) -> bool:
    H, D = boundary_weights(grow(w, n))
    return weight_of_word(w, n) == GlWeight.zero(n) and H.is_trivial() and D.is_trivial()


def invariant_basis(u: TypeString, n: int, max_words: Optional[int] = None) -> List[Word]:
    """Words of type u, weight 0, whose boundary weights H and D are multiples of the determinant."""
    candidates = list(enumerate_words(len(u), n, u, GlWeight.zero(n)))
    _guard(len(candidates), max_words)
    found = [w for w in candidates if is_invariant_word(w, n)]
    logger.info(f"Found {len(found)} invariant words of type {u} at n={n}")
    return found


def highest_weight_subset(u: TypeString, weight: GlWeight, n: int, max_words: Optional[int] = None) -> List[Word]:
    """Words of type u and weight lambda whose OB weight D is a multiple of the determinant."""
    if not weight.is_dominant():
        raise ValueError(f"weight {weight} is not dominant")
    candidates = list(enumerate_words(len(u), n, u, weight))
    _guard(len(candidates), max_words)
    found = []
    for w in candidates:
        _, D = boundary_weights(grow(w, n))
        if D.is_trivial():
            found.append(w)
    logger.info(f"Found {len(found)} highest weight words of type {u}, weight {weight} at n={n}")
    return found


def dual_type(u: TypeString) -> TypeString:
    """u reversed with every sign flipped."""
    return TypeString(signs=tuple('-' if s == '+' else '+' for s in reversed(u.signs)))


def endomorphism_basis(u: TypeString, n: int, max_words: Optional[int] = None) -> List[Word]:
    """Invariant words of u followed by its dual type, indexing a basis of End(V(u))."""
    return invariant_basis(TypeString(signs=u.signs + dual_type(u).signs), n, max_words)


def hecke_block(n: int, max_words: Optional[int] = None) -> BasisMatrix:
    """The weight (1, ..., 1) block of type +^n."""
    return assemble(n, n, TypeString(signs=('+',) * n), GlWeight(coords=(1,) * n), max_words)


def export_csv(m: BasisMatrix) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["row_word", "col_word", "poly"])
    for record in m.records():
        writer.writerow([record.row_word, record.col_word, record.poly])
    return buffer.getvalue()


def export_json(m: BasisMatrix) -> str:
    payload = {
        "n": m.n,
        "words": [str(w) for w in m.words],
        "entries": [record.dict() for record in m.records()],
    }
    return json.dumps(payload, indent=2)

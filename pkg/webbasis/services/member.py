"""Basis membership: read a word off a diagram, regrow it and compare normal forms."""
import logging
from typing import Dict, List, Optional, Tuple

from webbasis.models.diagram import FlowDiagram
from webbasis.models.report import MembershipReport
from webbasis.models.word import Word
from webbasis.services.errors import ZeroDiagramError
from webbasis.services.evaluation import state_sum
from webbasis.services.growth import BYPASS, boundary_weights, cup_sites, grow, same_normal_form, to_graph
from webbasis.services.words import enumerate_words, type_of, word_key

logger = logging.getLogger(__name__)


def extract_word(d: FlowDiagram) -> Word:
    """The lex-largest x with a nonzero coefficient in the evaluation of d."""
    H, D = boundary_weights(d)
    candidates = sorted(enumerate_words(d.r, d.n, type_of(d.word), H - D), key=word_key, reverse=True)
    for x in candidates:
        if state_sum(d, x):
            return x
    raise ZeroDiagramError(f"diagram of {d.word} has no completing state")


def _first_mismatch(d: FlowDiagram, other: FlowDiagram) -> Optional[Tuple[int, int]]:
    if d.r != other.r:
        return (0, 0)
    for mine, theirs in zip(d.cells, other.cells):
        if mine != theirs:
            return (mine.i, mine.j)
    return None


def is_basis_diagram(d: FlowDiagram) -> MembershipReport:
    """A diagram is a basis element iff it has the normal form of the diagram grown from its word."""
    try:
        x = extract_word(d)
    except ZeroDiagramError as e:
        logger.error(f"Error extracting a word: {str(e)}")
        raise
    regrown = grow(x, d.n)
    if same_normal_form(to_graph(d), to_graph(regrown)):
        return MembershipReport(is_basis=True, extracted_word=x)
    mismatch = _first_mismatch(d, regrown)
    logger.debug(f"Diagram of {d.word} differs from grow({x}) at {mismatch}")
    return MembershipReport(is_basis=False, extracted_word=x, mismatch_cell=mismatch)


def overrides_of(d: FlowDiagram) -> Dict[Tuple[int, int], str]:
    """Cells of d that use the bypass fill."""
    return {(c.i, c.j): BYPASS for c in d.cells if any(v.kind == 'cap' for v in c.internal)}


def mutations(d: FlowDiagram) -> List[Tuple[Tuple[int, int], FlowDiagram]]:
    """Every single-cell mutation of d: one cup site switched to the bypass fill, cells below regrown."""
    base = overrides_of(d)
    found = []
    for site in cup_sites(d):
        if site in base:
            continue
        overrides = dict(base)
        overrides[site] = BYPASS
        found.append((site, grow(d.word, d.n, overrides)))
    return found

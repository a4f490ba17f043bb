"""Verification suites run by the selftest command."""
import logging
import random
from itertools import product
from typing import Callable, List, Sequence, Tuple

from webbasis.models.report import SuiteReport
from webbasis.models.vectors import SubsetBasisVector
from webbasis.models.word import GlWeight, TypeString, Word
from webbasis.services import exterior
from webbasis.services.basis import assemble, highest_weight_subset, invariant_basis, verify_triangular
from webbasis.services.errors import ZeroDiagramError
from webbasis.services.evaluation import StateSumCache, count_states, evaluate_vector, slice_evaluate
from webbasis.services.growth import grow
from webbasis.services.member import is_basis_diagram, mutations
from webbasis.services.oracle import hook_length_count, oracle_dimensions
from webbasis.services.qint import ONE
from webbasis.services.wave import closed_wave_of, enumerate_closed, lattice_words
from webbasis.services.words import enumerate_words, weight_of_word

logger = logging.getLogger(__name__)

Operator = Callable[[SubsetBasisVector], SubsetBasisVector]

WAVE_TABLE = {
    "112233": ((1, 4, 5), (2, 3, 6)),
    "112323": ((1, 5, 6), (2, 3, 4)),
    "121233": ((1, 2, 6), (3, 4, 5)),
    "121323": ((1, 2, 4), (3, 5, 6)),
    "123123": ((1, 2, 3), (4, 5, 6)),
}


def generators(n: int) -> List[Tuple[str, Operator]]:
    """E_i, F_i for i < n and K_i^{+-1} for i <= n as named operators."""
    ops = []
    for i in range(1, n):
        ops.append((f"E{i}", lambda v, i=i: exterior.act_E(i, v)))
        ops.append((f"F{i}", lambda v, i=i: exterior.act_F(i, v)))
    for i in range(1, n + 1):
        ops.append((f"K{i}", lambda v, i=i: exterior.act_K(i, 1, v)))
        ops.append((f"K{i}^-1", lambda v, i=i: exterior.act_K(i, -1, v)))
    return ops


def basis_tensors(n: int, slots: Sequence[int]) -> List[SubsetBasisVector]:
    keys = [()]
    for label in slots:
        keys = [key + (I,) for key in keys for I in exterior.subsets(n, abs(label))]
    return [SubsetBasisVector.basis(n, slots, key) for key in keys]


def _commutes(report: SuiteReport, name: str, f: Operator, inputs: List[SubsetBasisVector], n: int) -> None:
    for label, g in generators(n):
        for v in inputs:
            left, right = f(g(v)), g(f(v))
            if left != right:
                report.add(f"{name} with {label}", False, f"on {v}: {left} != {right}")
                return
    report.add(name, True)


def equivariance_suite(n: int) -> SuiteReport:
    """merge_map and split_map commute with every generator on all basis tensors."""
    report = SuiteReport(suite=f"equivariance n={n}")
    labels = [a for a in range(-n, n + 1) if a != 0]
    for r in labels:
        for s in labels:
            if abs(r + s) > n:
                continue
            _commutes(report, f"merge_map({r},{s})", lambda v, r=r, s=s: exterior.merge_map(r, s, v),
                      basis_tensors(n, (r, s)), n)
            _commutes(report, f"split_map({r},{s})", lambda v, r=r, s=s: exterior.split_map(r, s, v),
                      basis_tensors(n, (r + s,)), n)
    return report


def relations_suite(ranks: Sequence[int] = (2, 3)) -> SuiteReport:
    """The defining relations hold and a sign-flipped commutator is caught."""
    report = SuiteReport(suite="quantum group relations")
    for n in ranks:
        result = exterior.verify_hopf_relations(n)
        report.add(f"relations n={n}", result.passed,
                   None if result.passed else "; ".join(c.line() for c in result.failures[:3]))
        mutated = exterior.verify_hopf_relations(n, mutate=True)
        report.add(f"mutated commutator rejected n={n}", not mutated.passed)
    return report


def triangularity_suite(cases: Sequence[Tuple[int, int]] = ((2, 4), (3, 3)), cache: StateSumCache = None) -> SuiteReport:
    """Full-alphabet matrices are unitriangular, diagonals have one state, and a planted entry is caught."""
    cache = cache if cache is not None else StateSumCache()
    report = SuiteReport(suite="triangularity")
    for n, r_max in cases:
        for r in range(1, r_max + 1):
            m = assemble(r, n, cache=cache)
            result = verify_triangular(m)
            report.add(f"unitriangular n={n} r={r}", result.passed,
                       None if result.passed else result.failures[0].line())
            single = all(count_states(grow(w, n), w) == 1 for w in m.words)
            report.add(f"diagonal has one state n={n} r={r}", single)
        low, high = m.words[0], m.words[-1]
        planted = m.with_entry(low, high, ONE)
        report.add(f"planted entry rejected n={n}", not verify_triangular(planted).passed)
    return report


def counting_suite() -> SuiteReport:
    """Invariant and highest weight counts against the q = 1 kernel oracle."""
    report = SuiteReport(suite="counting")
    for length in range(1, 5):
        for signs in product("+-", repeat=length):
            u = TypeString(signs=signs)
            found = len(invariant_basis(u, 2))
            expected = oracle_dimensions(u, "invariant", 2)
            report.add(f"invariants type {u} n=2", found == expected, f"{found} vs oracle {expected}")
    u = TypeString.parse("+-+-+-")
    found = len(invariant_basis(u, 2))
    report.add("invariants type +-+-+- n=2", found == 5, f"{found} vs 5")
    for n, weight, shape in ((2, (3, 3), (3, 3)), (3, (2, 2, 2), (2, 2, 2))):
        g = GlWeight(coords=weight)
        u = TypeString(signs=('+',) * 6)
        found = len(highest_weight_subset(u, g, n))
        expected = hook_length_count(shape)
        oracle = oracle_dimensions(u, g, n)
        report.add(f"highest weight {g} n={n}", found == expected == oracle,
                   f"{found} vs hook length {expected}, oracle {oracle}")
    return report


def wave_suite() -> SuiteReport:
    report = SuiteReport(suite="closed wave graphs")
    for text, blocks in WAVE_TABLE.items():
        g = closed_wave_of(Word.from_z(int(c) for c in text), 3)
        got = g.blocks if g is not None else None
        report.add(f"{text} -> {blocks}", got == blocks, None if got == blocks else f"got {got}")
    for n, k, expected in ((3, 2, 5), (3, 3, 42)):
        found = len(enumerate_closed(n, k))
        report.add(f"closed wave graphs {n}x{k}", found == expected, f"{found} vs {expected}")
        report.add(f"lattice words {n}x{k}", len(lattice_words(n, k)) == expected)
    return report


def cross_evaluator_suite(r_max: int = 3, samples: int = 10, sample_length: int = 4, seed: int = 7) -> SuiteReport:
    """State sums agree with slice evaluation and every term has the weight of its word."""
    report = SuiteReport(suite="cross-evaluator")
    words = [(w, 2) for r in range(1, r_max + 1) for w in enumerate_words(r, 2)]
    rng = random.Random(seed)
    pool = list(enumerate_words(sample_length, 3))
    words += [(w, 3) for w in rng.sample(pool, min(samples, len(pool)))]
    mismatched = []
    for w, n in words:
        by_states = evaluate_vector(w, n)
        by_slices = slice_evaluate(w, n)
        if by_states != by_slices:
            mismatched.append(str(w))
            continue
        target = weight_of_word(w, n)
        if any(exterior.key_weight(n, by_slices.slots, key) != target for key in by_slices.terms):
            mismatched.append(f"{w} (weight)")
    report.add(f"{len(words)} words", not mismatched, ", ".join(mismatched[:5]) or None)
    return report


def membership_suite(r_max: int = 3, ranks: Sequence[int] = (2, 3)) -> SuiteReport:
    """Grown diagrams are recognised and single-cell mutations are mostly rejected.

    An accepted mutation has already matched the normal form of its regrown word.
    """
    report = SuiteReport(suite="membership")
    failures = []
    rejected = total = 0
    for n in ranks:
        for r in range(1, r_max + 1):
            for w in enumerate_words(r, n):
                d = grow(w, n)
                result = is_basis_diagram(d)
                if not result.is_basis or result.extracted_word != w:
                    failures.append(str(w))
                for _, mutant in mutations(d):
                    total += 1
                    try:
                        verdict = is_basis_diagram(mutant)
                    except ZeroDiagramError:
                        rejected += 1
                        continue
                    if not verdict.is_basis:
                        rejected += 1
    report.add("grown diagrams round trip", not failures, ", ".join(failures[:5]) or None)
    if total:
        report.add("mutations rejected", rejected * 100 >= 95 * total, f"{rejected}/{total}")
    return report


def run_all(quick: bool = True) -> List[SuiteReport]:
    """Every suite; ``quick`` keeps the ranges small enough for an interactive run."""
    cache = StateSumCache()
    cases = ((2, 4), (3, 3)) if quick else ((2, 6), (3, 4))
    suites = [
        lambda: relations_suite((2, 3) if quick else (2, 3, 4)),
        lambda: equivariance_suite(2 if quick else 3),
        lambda: triangularity_suite(cases, cache),
        counting_suite,
        wave_suite,
        lambda: cross_evaluator_suite(3 if quick else 4, 10 if quick else 100, 4 if quick else 6),
        lambda: membership_suite(3 if quick else 4),
    ]
    reports = []
    for suite in suites:
        report = suite()
        logger.info(report.summary())
        reports.append(report)
    return reports

import json
from itertools import product

import pytest

from webbasis.models.word import GlWeight, TypeString
from webbasis.services.basis import (assemble, dual_type, endomorphism_basis, export_csv, export_json, hecke_block,
                                     highest_weight_subset, inverse_is_integral, invariant_basis,
                                     verify_triangular)
from webbasis.services.errors import ScaleGuardError
from webbasis.services.oracle import endomorphism_dimension, hook_length_count, oracle_dimensions
from webbasis.services.qint import ONE
from webbasis.services.words import enumerate_words, parse_word, weight_of_word


@pytest.mark.parametrize("n,r", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2)])
def test_full_alphabet_is_unitriangular(n, r, cache):
    report = verify_triangular(assemble(r, n, cache=cache))
    assert report.passed, report.lines()


@pytest.mark.slow
@pytest.mark.parametrize("n,r", [(2, 4), (2, 5), (2, 6), (3, 3), (3, 4)])
def test_full_alphabet_is_unitriangular_larger(n, r, cache):
    report = verify_triangular(assemble(r, n, cache=cache))
    assert report.passed, [c.line() for c in report.failures]


def test_planted_entry_above_the_diagonal_is_reported():
    m = assemble(2, 2)
    planted = m.with_entry(m.words[0], m.words[-1], ONE)
    report = verify_triangular(planted)
    assert not report.passed
    assert report.failures[0].name == f"A[{m.words[0]}][{m.words[-1]}]"


def test_inverse_is_integral():
    ok, inverse = inverse_is_integral(assemble(2, 2))
    assert ok
    assert inverse is not None


def test_block_by_type_and_weight():
    m = assemble(2, 2, TypeString.parse("++"), GlWeight(coords=(1, 1)))
    assert [str(w) for w in m.words] == ["12", "21"]
    assert m.entry(parse_word("21"), parse_word("12")) != 0
    assert m.entry(parse_word("12"), parse_word("21")) == 0


def test_scale_guard():
    with pytest.raises(ScaleGuardError):
        assemble(3, 2, max_words=10)


def test_hecke_block_matches_the_weight_block():
    m = hecke_block(2)
    assert [str(w) for w in m.words] == ["12", "21"]


def test_exports():
    m = assemble(2, 2, TypeString.parse("++"), GlWeight(coords=(1, 1)))
    lines = export_csv(m).splitlines()
    assert lines[0] == "row_word,col_word,poly"
    assert len(lines) == 1 + len(m.entries)
    payload = json.loads(export_json(m))
    assert payload["n"] == 2
    assert payload["words"] == ["12", "21"]
    assert {"row_word": "21", "col_word": "21", "poly": "-1"} in payload["entries"]


@pytest.mark.parametrize("length", [1, 2, 3, 4])
def test_invariant_counts_match_the_oracle(length):
    for signs in product("+-", repeat=length):
        u = TypeString(signs=signs)
        assert len(invariant_basis(u, 2)) == oracle_dimensions(u, "invariant", 2), str(u)


def test_invariant_count_alternating_six():
    assert len(invariant_basis(TypeString.parse("+-+-+-"), 2)) == 5


@pytest.mark.parametrize("signs", ["+-", "++-", "+++", "+-+-", "++--", "+--+"])
def test_invariant_counts_rank_three(signs):
    u = TypeString.parse(signs)
    assert len(invariant_basis(u, 3)) == oracle_dimensions(u, "invariant", 3)


def test_highest_weight_catalan():
    words = highest_weight_subset(TypeString.parse("++++++"), GlWeight(coords=(3, 3)), 2)
    assert len(words) == hook_length_count((3, 3)) == 5


def test_highest_weight_rank_three():
    words = highest_weight_subset(TypeString.parse("++++++"), GlWeight(coords=(2, 2, 2)), 3)
    assert len(words) == 5


@pytest.mark.slow
@pytest.mark.parametrize("n", [2, 3])
def test_highest_weight_counts_match_the_oracle(n):
    for length in range(1, 5):
        for signs in product("+-", repeat=length):
            u = TypeString(signs=signs)
            weights = {weight_of_word(w, n) for w in enumerate_words(length, n, u)}
            for weight in sorted((w for w in weights if w.is_dominant()), key=lambda w: w.coords):
                found = highest_weight_subset(u, weight, n)
                assert len(found) == oracle_dimensions(u, weight, n), f"{u} {weight}"


@pytest.mark.slow
def test_invariant_counts_rank_three_exhaustive():
    for length in range(1, 5):
        for signs in product("+-", repeat=length):
            u = TypeString(signs=signs)
            assert len(invariant_basis(u, 3)) == oracle_dimensions(u, "invariant", 3), str(u)


def test_highest_weight_words_are_reversed_lattice_words():
    for w in highest_weight_subset(TypeString.parse("++++"), GlWeight(coords=(2, 2)), 2):
        counts = [0, 0]
        for a in reversed(w.z):
            counts[a - 1] += 1
            assert counts[0] >= counts[1], str(w)


def test_highest_weight_needs_a_dominant_weight():
    with pytest.raises(ValueError):
        highest_weight_subset(TypeString.parse("++"), GlWeight(coords=(0, 2)), 2)


@pytest.mark.parametrize("signs,r", [("+", 1), ("++", 2), ("+++", 3)])
def test_endomorphism_basis(signs, r):
    u = TypeString.parse(signs)
    assert len(endomorphism_basis(u, 2)) == endomorphism_dimension(r, 2)


def test_dual_type():
    assert str(dual_type(TypeString.parse("++-"))) == "+--"

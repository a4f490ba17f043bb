import random

import pytest

from webbasis.models.diagram import Vertex
from webbasis.models.vectors import SubsetBasisVector
from webbasis.services import exterior
from webbasis.services.errors import SlotMismatchError
from webbasis.services.evaluation import (StateSumCache, boundary_conditions, coefficients, count_states,
                                          evaluate_vector, local_heft, owed_weights, slice_evaluate, state_sum,
                                          within_capacity)
from webbasis.services.growth import grow
from webbasis.services.qint import ONE, Q, ZERO, LaurentPoly, is_unit
from webbasis.services.words import enumerate_words, parse_word, weight_of_word, word_key

from tests.conftest import words_up_to


def test_single_letter():
    assert coefficients(parse_word("2"), 2) == [(parse_word("2"), -ONE)]
    assert coefficients(parse_word("1"), 2) == [(parse_word("1"), ONE)]


def test_highest_weight_vector_of_21():
    v = evaluate_vector(parse_word("21"), 2)
    expected = SubsetBasisVector(2, (1, 1), {(frozenset({2}), frozenset({1})): -ONE,
                                             (frozenset({1}), frozenset({2})): Q})
    assert v == expected
    # killed by E1
    assert exterior.act_E(1, v).is_zero()


def test_boundary_conditions_of_2211():
    d = grow(parse_word("2211"), 2)
    bc = boundary_conditions(d, parse_word("2211"))
    assert bc.oa == (frozenset({1, 2}),) * 2 + (frozenset(),) * 2
    assert bc.ob == (frozenset(),) * 4


def test_type_mismatch():
    d = grow(parse_word("12"), 2)
    with pytest.raises(SlotMismatchError):
        state_sum(d, parse_word("12'"))


def test_empty_word():
    d = grow(parse_word(""), 2)
    assert state_sum(d, parse_word("")) == ONE
    assert count_states(d, parse_word("")) == 1


@pytest.mark.parametrize("n,r_max", [(2, 3), (3, 2)])
def test_diagonal_is_a_single_unit_state(n, r_max):
    for w in words_up_to(r_max, n):
        d = grow(w, n)
        assert count_states(d, w) == 1, str(w)
        assert is_unit(state_sum(d, w)), str(w)


def test_terms_carry_the_weight_of_the_word():
    for w in words_up_to(3, 2):
        target = weight_of_word(w, 2)
        for x, value in coefficients(w, 2):
            assert value != ZERO
            assert weight_of_word(x, 2) == target


def test_cache_reuses_values(cache):
    w = parse_word("211")
    first = evaluate_vector(w, 2, cache)
    misses = cache.misses
    assert evaluate_vector(w, 2, cache) == first
    assert cache.misses == misses
    assert cache.hits >= misses
    cache.clear()
    assert len(cache) == 0


def test_cache_first_value_wins():
    cache = StateSumCache()
    assert cache.get_or_compute("k", lambda: ONE) == ONE
    assert cache.get_or_compute("k", lambda: LaurentPoly.constant(2)) == ONE


@pytest.mark.slow
@pytest.mark.parametrize("n", [2, 3])
def test_diagonal_and_support_up_to_length_four(n):
    for w in words_up_to(4, n):
        d = grow(w, n)
        assert count_states(d, w) == 1, str(w)
        for x, _ in coefficients(w, n):
            assert word_key(x) <= word_key(w), f"{x} above {w}"


@pytest.mark.slow
def test_slice_evaluation_matches_state_sums_exhaustively():
    for w in words_up_to(4, 2):
        assert slice_evaluate(w, 2) == evaluate_vector(w, 2), str(w)


@pytest.mark.slow
def test_slice_evaluation_matches_state_sums_on_random_words():
    rng = random.Random(11)
    pool = list(enumerate_words(6, 3))
    for w in rng.sample(pool, 100):
        assert slice_evaluate(w, 3) == evaluate_vector(w, 3), str(w)


def test_slice_evaluation_small():
    for w in words_up_to(2, 3):
        assert slice_evaluate(w, 3) == evaluate_vector(w, 3), str(w)


def test_local_heft():
    merge = Vertex(kind='merge', inputs=(1, 1), outputs=(2,))
    A, B = frozenset({1}), frozenset({2})
    heft = local_heft(2, merge, [A, B], [A | B])
    assert heft == exterior.merge_image(2, 1, 1, A, B)[1]
    with pytest.raises(ValueError):
        local_heft(2, merge, [A, A], [A])
    cup = Vertex(kind='cup', outputs=(1, -1))
    assert is_unit(local_heft(2, cup, [], [A, A]))


def test_frontier_weight_bookkeeping():
    d = grow(parse_word("21"), 2)
    owed = owed_weights(2, boundary_conditions(d, parse_word("12")))
    assert owed == [(0, 0), (0, 0)]
    S = frozenset
    assert within_capacity(2, ((S({1, 2}), S({1})), (S({1}), S())), owed[0])
    assert not within_capacity(2, ((S({1, 2}), S({1})), (S({2}), S())), owed[0])
    tall = grow(parse_word("2211"), 2)
    assert owed_weights(2, boundary_conditions(tall, parse_word("2211")))[0] == (1, 1)

import pytest
from hypothesis import given, settings as hsettings, strategies as st

from webbasis.models.vectors import SubsetBasisVector
from webbasis.services import exterior
from webbasis.services.errors import RankError, ScaleGuardError, SlotMismatchError
from webbasis.services.qint import ONE, Q, ZERO, LaurentPoly, q_power, qbinomial
from webbasis.services.selftest import basis_tensors, equivariance_suite, generators

S = frozenset


def vec(n, slots, *key):
    return SubsetBasisVector.basis(n, slots, key)


def test_pi_counts_inversions():
    assert exterior.pi({2, 3}, {1}) == 2
    assert exterior.pi({1}, {2, 3}) == 0


def test_multiply_sign():
    assert exterior.multiply(vec(2, (1, 1), {1}, {2})) == vec(2, (2,), {1, 2})
    assert exterior.multiply(vec(2, (1, 1), {2}, {1})) == vec(2, (2,), {1, 2}).scale(-q_power(-1))
    assert exterior.multiply(vec(2, (1, 1), {1}, {1})).is_zero()


def test_comultiply_top_form():
    image = exterior.comultiply(vec(2, (2,), {1, 2}), 1, 1)
    expected = vec(2, (1, 1), {1}, {2}).scale(Q) - vec(2, (1, 1), {2}, {1})
    assert image == expected


def test_counit_and_coassociativity():
    v = vec(3, (3,), {1, 2, 3})
    assert exterior.counit(exterior.comultiply(v, 0, 3), 0).normalized() == v
    left = exterior.comultiply(exterior.comultiply(v, 2, 1), 1, 1, 0)
    right = exterior.comultiply(exterior.comultiply(v, 1, 2), 1, 1, 1)
    assert left == right


def test_pairing_exponents_follow_the_subset_sum():
    table = exterior.pairing_exponents(4, 2)
    for I, phi in table.items():
        assert phi == sum(I) - 3


def test_ev_on_rank_two():
    assert exterior.ev_coefficient(2, S({1})) == ONE
    assert exterior.ev_coefficient(2, S({2})) == LaurentPoly({-1: -1})
    assert exterior.ev_dual_coefficient(2, S({2})) == LaurentPoly({0: -1})
    assert exterior.coev_coefficient(2, S({1})) == Q


@pytest.mark.parametrize("n,p", [(2, 1), (3, 1), (3, 2), (4, 2)])
def test_loop_value(n, p):
    assert exterior.loop_value(n, p) == qbinomial(n, p)
    start = vec(n, (0,), S())
    dual_loop = exterior.evaluate_pairing(exterior.coevaluate(start, 0, -p), 0)
    assert dual_loop.coefficient((S(),)) == qbinomial(n, p)


@pytest.mark.parametrize("n,p", [(2, 1), (3, 1), (3, 2), (4, 2)])
def test_zig_zags_are_identities(n, p):
    for J in exterior.subsets(n, p):
        bent = exterior.coevaluate(vec(n, (p, 0), J, S()), 1, -p)
        assert exterior.evaluate_pairing(bent, 0) == vec(n, (0, p), S(), J)
        bent = exterior.coevaluate(vec(n, (0, p), S(), J), 0, p)
        assert exterior.evaluate_pairing(bent, 1) == vec(n, (p, 0), J, S())


def test_split_then_merge_on_a_cup():
    v = vec(2, (0,), S())
    loop = exterior.merge_map(1, -1, exterior.split_map(1, -1, v))
    assert loop.coefficient((S(),)) == exterior.loop_value(2, 1)


def test_merge_image_agrees_with_merge_map():
    n = 3
    for r, s in [(2, -1), (1, -2), (-2, 1), (-1, 2), (1, -1), (-1, 1), (1, 2), (-1, -1)]:
        for v in basis_tensors(n, (r, s)):
            (key, _), = v.terms.items()
            image = exterior.merge_image(n, r, s, *key)
            mapped = exterior.merge_map(r, s, v)
            if image is None:
                assert mapped.is_zero()
            else:
                assert mapped == vec(n, (r + s,), image[0]).scale(image[1])


def test_split_preimage_agrees_with_split_map():
    n = 3
    for r, s in [(2, -1), (1, -2), (-2, 1), (-1, 2), (1, -1), (2, 1), (-1, -2)]:
        for v in basis_tensors(n, (r + s,)):
            (key, _), = v.terms.items()
            for out_key, coeff in exterior.split_map(r, s, v).terms.items():
                found = exterior.split_preimage(n, r, s, *out_key)
                assert found == (key[0], coeff)


def test_slot_mismatch():
    with pytest.raises(SlotMismatchError):
        exterior.multiply(vec(2, (1, -1), {1}, {1}))
    with pytest.raises(SlotMismatchError):
        exterior.evaluate_pairing(vec(2, (1, 1), {1}, {2}))


def test_label_out_of_range():
    with pytest.raises(RankError):
        exterior.merge_map(2, 1, vec(2, (2, 1), {1, 2}, {1}))


def test_weights_and_extremal_vectors():
    assert exterior.highest_vector(3, 2).members == S({1, 2})
    assert exterior.lowest_vector(3, 2).members == S({2, 3})
    low = exterior.lowest_dual_vector(3, 2)
    assert exterior.weight_of(low).coords == (-1, -1, 0)


def test_highest_vector_is_killed_by_every_raising_operator():
    for p in range(4):
        v = vec(3, (p,), exterior.highest_vector(3, p).members)
        for i in (1, 2):
            assert exterior.act_E(i, v).is_zero()


def test_act_on_tensor_word():
    v = vec(2, (1, 1), {2}, {2})
    assert exterior.act_on_tensor(["K1^-1", "E1"], v) == exterior.act_K(1, -1, exterior.act_E(1, v))
    with pytest.raises(ValueError):
        exterior.act_on_tensor(["X1"], v)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_relations_hold(n):
    report = exterior.verify_hopf_relations(n)
    assert report.passed, report.lines()


def test_mutated_commutator_is_caught():
    assert not exterior.verify_hopf_relations(2, mutate=True).passed


def test_relation_suite_guard():
    with pytest.raises(ScaleGuardError):
        exterior.verify_hopf_relations(9)


def test_equivariance_rank_two():
    report = equivariance_suite(2)
    assert report.passed, [c.line() for c in report.failures]


@pytest.mark.slow
def test_equivariance_rank_three():
    report = equivariance_suite(3)
    assert report.passed, [c.line() for c in report.failures]


labels = st.sampled_from([-3, -2, -1, 1, 2, 3])


@hsettings(max_examples=40, deadline=None)
@given(labels, labels, st.data())
def test_merge_map_commutes_with_generators(r, s, data):
    if abs(r + s) > 3:
        return
    v = data.draw(st.sampled_from(basis_tensors(3, (r, s))))
    name, g = data.draw(st.sampled_from(generators(3)))
    assert exterior.merge_map(r, s, g(v)) == g(exterior.merge_map(r, s, v)), name


def test_vector_text_form():
    v = vec(2, (1, -1), {1}, {2}).scale(q_power(2)) + vec(2, (1, -1), {2}, {2}).scale(ONE + Q)
    assert str(v) == "q^2*v{1}(x)vb{2} + (q + 1)*v{2}(x)vb{2}"
    signed = vec(2, (1, 1), {1}, {2}).scale(Q) - vec(2, (1, 1), {2}, {1})
    assert str(signed) == "q*v{1}(x)v{2} - v{2}(x)v{1}"
    assert str(vec(2, (1,), {1}).scale(-q_power(-1))) == "-q^-1*v{1}"
    assert str(SubsetBasisVector.zero(2, (1,))) == "0"
    assert v.coefficient(({1}, {1})) == ZERO

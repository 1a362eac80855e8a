"""Tests for the identity verification engine."""

import random
from fractions import Fraction
from math import factorial

import pytest

from hookforge.exact import Polynomial, RationalFunction
from hookforge.identity import (
    hook_weight_sum,
    phi_n,
    rho,
    sample_distinct_rationals,
    verify_corner_hooks,
    verify_lemma1,
    verify_phi_recursion,
    verify_prop2,
    verify_prop2_for_shape,
    verify_prop3,
    verify_prop3_alternating,
    verify_prop3_residues,
    verify_theorem1,
    verify_theorem1prime,
    verify_weight_substitution,
    weight_lambda,
    weight_w,
)
from hookforge.involutions import involution_count
from hookforge.partitions import (
    Partition,
    add_cell,
    addable_cells,
    corner_profile,
    f_lambda,
    hooks,
    partitions_of,
    removable_cells,
    remove_cell,
)


def P(*coeffs):
    return Polynomial(coeffs)


def naive_weight(lam):
    """Shape weight through generic arithmetic only, no factored fast path."""
    total = RationalFunction.one()
    for h in hooks(lam):
        total = total * weight_w(h)
    return total


# -- hook weight w -----------------------------------------------------------


def test_weight_w_examples():
    assert weight_w(1) == RationalFunction(P(1, 1), P(1, -1))
    assert weight_w(2) == RationalFunction(P(1, 0, 1), P(1, 0, -1))
    assert weight_w(-1) == -weight_w(1)


def test_weight_w_zero_raises():
    with pytest.raises(ValueError, match="pole"):
        weight_w(0)


def test_weight_w_antisymmetry():
    for h in range(1, 51):
        assert weight_w(-h) == -weight_w(h)


def test_weight_lambda_examples():
    assert weight_lambda(Partition(())) == RationalFunction.one()
    assert weight_lambda(Partition((1,))) == weight_w(1)
    # hooks of (2) are {2, 1}
    assert weight_lambda(Partition((2,))) == weight_w(1) * weight_w(2)


def test_weight_lambda_matches_generic_product():
    # validates the factored cyclotomic engine against plain arithmetic
    for n in range(9):
        for lam in partitions_of(n):
            assert weight_lambda(lam) == naive_weight(lam), lam


# -- the interpolating weight and its series ---------------------------------


def test_rho_examples():
    assert rho(1) == RationalFunction.one()
    assert rho(2) == RationalFunction(P(1, 1), P(4))
    assert rho(3) == RationalFunction(P(1, 3), P(9, 3))
    with pytest.raises(ValueError):
        rho(0)


def test_rho_specializes_to_hook_reciprocals():
    for h in range(1, 12):
        assert rho(h)(0) == Fraction(1, h * h)
        assert rho(h)(1) == Fraction(1, h)


def test_hook_weight_sum_is_polynomial_with_positive_coeffs():
    for n in range(9):
        total = hook_weight_sum(n)
        assert total.is_polynomial
        poly = total.as_polynomial()
        assert poly.degree == n // 2
        assert all(c > 0 for c in poly.coeffs)
        assert poly(0) == Fraction(1, factorial(n))
        assert poly(1) == Fraction(involution_count(n), factorial(n))


def test_theorem1_second_coefficient():
    # the two shapes of 2 each contribute (1 + z)/4
    assert hook_weight_sum(2) == RationalFunction(P(1, 1), P(2))


def test_verify_theorem1():
    report = verify_theorem1(8)
    assert report.passed, report.witness


# -- the two sides of the expansion identity ---------------------------------


def test_phi_small_values():
    assert phi_n(0) == RationalFunction.one()
    assert phi_n(1) == weight_w(1)
    assert phi_n(2) == RationalFunction(P(2, 0, 2), P(1, -2, 1))


def test_phi_matches_generic_sum():
    for n in range(7):
        total = RationalFunction.zero()
        for lam in partitions_of(n):
            total = total + f_lambda(lam) * naive_weight(lam)
        assert total == phi_n(n)


def test_verify_theorem1prime_small():
    for n in range(9):
        report = verify_theorem1prime(n)
        assert report.passed, report.witness
        assert report.check == "theorem1prime" and report.params == {"n": n}


def test_verify_phi_recursion():
    for n in range(7):
        assert verify_phi_recursion(n).passed
    assert phi_n(1) == weight_w(1) * phi_n(0)  # the boundary case spelled out


# -- extend-retract identity --------------------------------------------------


def naive_lemma_check(lam):
    """The extend-retract identity through generic arithmetic, undivided."""
    lhs = RationalFunction.zero()
    for cell in addable_cells(lam):
        lhs = lhs + naive_weight(add_cell(lam, cell))
    rhs = weight_w(1) * naive_weight(lam)
    for cell in removable_cells(lam):
        rhs = rhs + naive_weight(remove_cell(lam, cell))
    return lhs == rhs


def test_verify_lemma1_examples():
    assert verify_lemma1(Partition(())).passed
    assert verify_lemma1(Partition((1,))).passed
    assert verify_lemma1(Partition((2, 1))).passed
    # the single-cell case written out: w((2)) + w((1,1)) = w(1)^2 + 1
    lhs = weight_lambda(Partition((2,))) + weight_lambda(Partition((1, 1)))
    assert lhs == weight_w(1) ** 2 + 1
    assert lhs == RationalFunction(P(2, 0, 2), P(1, -2, 1))


def test_verify_lemma1_matches_undivided_generic_route():
    for n in range(7):
        for lam in partitions_of(n):
            assert verify_lemma1(lam).passed == naive_lemma_check(lam)
            assert verify_lemma1(lam).passed


def test_verify_lemma1_sweep():
    for n in range(10):
        for lam in partitions_of(n):
            report = verify_lemma1(lam)
            assert report.passed, report.witness


# -- corner content relations --------------------------------------------------


def test_corner_hooks_example_values():
    # extending (3,1) at its content-0 corner: the hook above becomes 3
    lam = Partition((3, 1))
    prof = corner_profile(lam)
    assert prof.outer_contents[0] - prof.outer_contents[1] == 3
    assert verify_corner_hooks(lam, 2).passed

    assert verify_corner_hooks(Partition((1,)), 1).passed  # vacuous products

    # (2,2): hook at (1,2) equals outer content 2 minus inner content 0
    assert verify_corner_hooks(Partition((2, 2)), 1).passed


def test_corner_hooks_index_validation():
    with pytest.raises(ValueError):
        verify_corner_hooks(Partition((2, 1)), 0)
    with pytest.raises(ValueError):
        verify_corner_hooks(Partition((2, 1)), 5)


def test_corner_hooks_sweep():
    for n in range(10):
        for lam in partitions_of(n):
            d = len(corner_profile(lam).outer_cells)
            for k in range(1, d + 1):
                report = verify_corner_hooks(lam, k)
                assert report.passed, report.witness


# -- corner content identity (interlaced weight-ratio sums) --------------------


def test_prop2_single_corner_is_trivial():
    assert verify_prop2([0], []).passed
    assert verify_prop2([17], []).passed


def test_prop2_content_examples():
    assert verify_prop2([3, 0, -2], [2, -1]).passed
    assert verify_prop2([2, -2], [0]).passed


def test_prop2_rejects_duplicates():
    with pytest.raises(ValueError, match="distinct"):
        verify_prop2([3, 0, 3], [2, -1])
    with pytest.raises(ValueError, match="distinct"):
        verify_prop2([3, 0], [3])


def test_prop2_rejects_non_integer_contents():
    with pytest.raises(TypeError):
        verify_prop2([Fraction(1, 2), 0], [1])


def test_prop2_shape_sweep():
    for n in range(10):
        for lam in partitions_of(n):
            report = verify_prop2_for_shape(lam)
            assert report.passed, report.witness


# -- symmetric two-term sum -----------------------------------------------------


def test_prop3_examples():
    assert verify_prop3([5]).passed
    assert verify_prop3([1, 2]).passed
    # 3*5/((-1)(-3)) + 3*6/(1*(-2)) + 5*6/(3*2) = 5 - 9 + 5 = 1
    assert verify_prop3([1, 2, 4]).passed


def test_prop3_value_by_hand():
    from hookforge.identity import _signed_ratio_sum

    assert _signed_ratio_sum([Fraction(1), Fraction(2), Fraction(4)]) == 1
    assert _signed_ratio_sum([Fraction(1), Fraction(2)]) == 0


def test_prop3_rejects_bad_inputs():
    with pytest.raises(ValueError, match="distinct"):
        verify_prop3([1, 1, 2])
    with pytest.raises(ValueError, match="distinct"):
        verify_prop3([0, 1])
    with pytest.raises(ValueError):
        verify_prop3([])


def test_prop3_random_vectors():
    rng = random.Random(8128)
    for n in range(1, 21):
        vector = sample_distinct_rationals(rng, n)
        assert verify_prop3(vector).passed


def test_prop3_residues_single_value():
    # (t+1)/(t-1) = 1 + 2/(t-1): the only residue is 2
    assert verify_prop3_residues([1]).passed


def test_prop3_residues_frozen_pair():
    # b = (-3, 3) so the residues are (-6, 12); at t=0: 1 - (-6 + 6) = 1
    report = verify_prop3_residues([1, 2])
    assert report.passed, report.witness
    # the frozen values, recomputed here by plain polynomial division in t
    num = P(1, 1) * P(2, 1)  # (t+1)(t+2)
    den = P(-1, 1) * P(-2, 1)  # (t-1)(t-2)
    c1 = num(Fraction(1)) / (den // P(-1, 1))(Fraction(1))
    c2 = num(Fraction(2)) / (den // P(-2, 1))(Fraction(2))
    assert (c1, c2) == (-6, 12)
    assert 1 - (c1 / 1 + c2 / 2) == 1  # the t = 0 evaluation


def test_prop3_residues_match_deleted_products():
    rng = random.Random(496)
    for n in (3, 7, 12):
        vector = sample_distinct_rationals(rng, n)
        assert verify_prop3_residues(vector).passed


def test_prop3_residues_reject_zero_sum_pairs():
    with pytest.raises(ValueError):
        verify_prop3_residues([3, -3, 1])


def test_prop3_alternating():
    for n in range(2, 7):
        report = verify_prop3_alternating(n)
        assert report.passed, report.witness
    with pytest.raises(ValueError):
        verify_prop3_alternating(1)
    with pytest.raises(ValueError):
        verify_prop3_alternating(7)


def test_alternating_left_side_vanishes_for_two_values():
    # (a_1 + a_2) - (a_2 + a_1) = 0
    report = verify_prop3_alternating(2)
    assert report.passed


# -- substitution between the z-form and q-form weights -------------------------


def test_weight_substitution_examples():
    assert verify_weight_substitution(1).passed
    assert verify_weight_substitution(2).passed
    assert verify_weight_substitution(3).passed


def test_weight_substitution_canonical_value_at_two():
    # both sides reduce to (1 + q^2) / (2 (1 + q)^2)
    expected = RationalFunction(P(1, 0, 1), 2 * P(1, 1) ** 2)
    lhs = rho(2)  # (1+z)/4 evaluated at z = ((1-q)/(1+q))^2
    num = P(1, 1) ** 2 + P(1, -1) ** 2
    assert RationalFunction(num, 4 * P(1, 1) ** 2) == expected
    rhs = weight_w(2) * RationalFunction(P(1, -1), 2 * P(1, 1))
    assert rhs == expected
    assert lhs(Fraction(1, 4)) == Fraction(5, 16)  # sanity: (1 + 1/4)/4


def test_weight_substitution_sweep():
    for n in range(1, 13):
        report = verify_weight_substitution(n)
        assert report.passed, report.witness


# -- sampling -------------------------------------------------------------------


def test_sample_distinct_rationals_properties():
    rng = random.Random(42)
    values = sample_distinct_rationals(rng, 40)
    assert len(values) == 40
    assert all(v != 0 for v in values)
    assert len({abs(v) for v in values}) == 40  # distinct, no zero-sum pairs
    again = sample_distinct_rationals(random.Random(42), 40)
    assert values == again


def test_reports_carry_reproducible_witnesses():
    bad = verify_prop2([3, 0, -2], [2, -1])
    assert bad.witness is None and bad.verdict == "pass" and bad.millis >= 0

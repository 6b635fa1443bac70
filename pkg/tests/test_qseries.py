from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from wallforge.partition import count_partitions, enumerate_class
from wallforge.qseries import (ProductExpr, Series, StringFormula, coeff, euler, expand, multiplicities,
                               sigma_from_Sigma, string_function)


def test_inverse_euler_counts_partitions():
    assert expand(euler(1, -1), 5).coeffs == (1, 1, 2, 3, 5, 7)


def test_empty_product_is_one():
    assert expand(ProductExpr(), 3).coeffs == (1, 0, 0, 0)


def test_euler_function_pentagonal():
    assert expand(euler(1, 1), 5).coeffs == (1, -1, -1, 0, 0, 1)
    assert (expand(euler(1, 1), 5) * expand(euler(1, -1), 5)).coeffs == (1, 0, 0, 0, 0, 0)


def test_coeff_lookups():
    s = expand(euler(1, -1), 10)
    assert coeff(s, 0) == 1
    assert coeff(s, 6) == 11
    assert coeff(expand(euler(2, 1) * euler(1, -2), 10), 3) == 8
    with pytest.raises(IndexError):
        coeff(s, 11)


def test_half_offset_needs_half_powers():
    with pytest.raises(ValueError, match="half_powers"):
        expand(euler(Fraction(1, 2), -1), 4)


@given(st.lists(st.tuples(st.integers(1, 4), st.integers(-3, 3)), max_size=4), st.integers(0, 15))
def test_product_times_inverse_is_one(factors, T):
    x = ProductExpr(tuple(factors))
    assert (expand(x, T) * expand(x.inverse(), T)).coeffs == Series.one(T).coeffs


def test_counts_match_enumeration_up_to_20():
    s = expand(euler(1, -1), 20)
    assert [coeff(s, m) for m in range(21)] == [count_partitions(m) for m in range(21)]


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_multipartitions_generating_function(k):
    s = expand(euler(1, -k), 12)
    assert list(s.coeffs) == [len(enumerate_class("P_k", m, k)) for m in range(13)]


def test_string_function_examples():
    a4 = multiplicities(string_function("A2even", 2, "A2even-diag"), 6)
    assert a4 == list(expand(euler(1, -3), 6).coeffs)
    assert multiplicities(string_function("D1", 3, "D1-diag"), 4) == [1, 5, 20, 65, 190]
    b = multiplicities(string_function("B1", 3, "B-diag-Λn"), 6)
    assert b == list(expand(euler(2, 1) * euler(1, -5), 6).coeffs)


def test_string_function_rejects_foreign_case():
    with pytest.raises(ValueError, match="valid"):
        string_function("A1", 2, "D1-diag")
    with pytest.raises(ValueError, match="valid cases"):
        string_function("A1", 2, "nonsense")


@pytest.mark.parametrize("n", [3, 4, 5])
def test_half_power_formula_lives_on_integer_powers(n):
    s = string_function("B1", n, "B-diag-L0").expand(20)
    assert s.half_powers
    assert all(c == 0 for c in s.coeffs[1::2])


def test_halving_refuses_odd_coefficients():
    bad = StringFormula(((Fraction(1, 2), euler(1, -1)),))
    with pytest.raises(ArithmeticError):
        bad.expand(5)


def test_sigma_from_Sigma():
    a1 = expand(euler(1, -2), 10)
    assert sigma_from_Sigma(a1, 1).coeffs == expand(euler(1, -1), 10).coeffs
    assert sigma_from_Sigma(Series.one(6), 1).coeffs == expand(euler(1, 1), 6).coeffs


def test_sigma_for_d3_twisted_is_counted_by_reduced_walls():
    from wallforge.affine import affine_data
    from wallforge.wall import enumerate_walls, is_reduced

    d = affine_data("D2", 2)
    sigma = sigma_from_Sigma(string_function("D2", 2, "D2-diag").expand(5), 2)
    reduced = [sum(1 for Y in enumerate_walls(d, 0, d.delta_multiple(m)) if is_reduced(Y)) for m in range(6)]
    assert list(sigma.coeffs) == reduced


def test_json_round_trip():
    s = string_function("B1", 3, "B-cross").expand(4)
    assert Series.from_json(s.to_json()) == s
    assert s.to_json()["t_is_sqrt_q"] is True

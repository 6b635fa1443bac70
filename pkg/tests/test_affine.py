import pytest

from wallforge.affine import (FAMILIES, MIN_RANK, Weight, add, affine_data, is_delta_multiple, null_check,
                              pairing, sub)
from wallforge.wall import Pattern, column_content, delta_column_top

SUPPORTED = [(f, n) for f in FAMILIES for n in range(MIN_RANK[f], MIN_RANK[f] + 4)]


@pytest.mark.parametrize("family,n", SUPPORTED)
def test_delta_is_null(family, n):
    assert null_check(affine_data(family, n))


@pytest.mark.parametrize("family,n", SUPPORTED)
def test_period_block_count_matches_L(family, n):
    d = affine_data(family, n)
    period = d.n if family == "A1" else d.L
    assert sum(d.block_counts) == period


def test_a4_twisted_constants():
    d = affine_data("A2even", 2)
    assert (d.ell, d.L, d.epsilon_decomp, d.delta) == (5, 5, 1, (2, 2, 1))


def test_d3_twisted_constants():
    d = affine_data("D2", 2)
    assert (d.ell, d.L, d.layout_ratio, d.epsilon_decomp) == (3, 6, 2, 2)
    assert d.block_counts == tuple(2 * x for x in d.delta)


def test_b3_constants():
    d = affine_data("B1", 3)
    assert d.ell == 6
    assert d.delta == (1, 1, 2, 2)
    assert d.gamma == (1, 0, 1, 1)


def test_layout_ratio_differs_from_epsilon_for_untwisted_d():
    d = affine_data("D1", 4)
    assert d.layout_ratio == 2 and d.epsilon_decomp == 1


def test_level_one_weights():
    assert affine_data("A1", 3).level1_weights == (0, 1, 2)
    assert affine_data("A2even", 2).level1_weights == (0,)
    assert affine_data("D2", 3).level1_weights == (0, 3)
    assert affine_data("A2odd", 3).level1_weights == (0, 1)
    assert affine_data("D1", 3).level1_weights == (0, 1, 3, 4)
    assert affine_data("B1", 3).level1_weights == (0, 1, 3)


def test_bad_inputs():
    with pytest.raises(ValueError, match="needs n"):
        affine_data("B1", 2)
    with pytest.raises(ValueError, match="unknown family"):
        affine_data("E8", 1)


def test_is_delta_multiple():
    d = affine_data("A2even", 2)
    assert is_delta_multiple(d, (4, 4, 2)) == 2
    assert is_delta_multiple(d, add(d.delta, d.simple_root(0))) is None
    assert is_delta_multiple(d, d.zero()) == 0


def test_pairing():
    d = affine_data("A1", 2)
    assert pairing(d, Weight(0, d.zero()), 0) == 1
    assert pairing(d, Weight(0, d.simple_root(0)), 0) == -1
    d = affine_data("B1", 3)
    # Lambda_0 - gamma is Lambda_1
    for i in d.index_set:
        assert pairing(d, Weight(0, d.gamma), i) == (1 if i == 1 else 0)


def test_content_arithmetic():
    a, b = (1, 2, 0), (0, 1, 1)
    assert add(a, b) == add(b, a)
    assert sub(add(a, b), b) == a


@pytest.mark.parametrize("family,n", [(f, n) for f in FAMILIES for n in range(MIN_RANK[f], MIN_RANK[f] + 2)])
def test_every_period_has_content_eps_delta(family, n):
    d = affine_data(family, n)
    for lam in d.level1_weights:
        pat = Pattern(d, lam)
        for k in range(1, 5):
            for periods in (1, 2):
                b = periods * pat.period
                got = column_content(pat, k, b, delta_column_top(pat, k, b))
                assert got == tuple(periods * a for a in d.block_counts)

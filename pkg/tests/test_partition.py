import itertools

import pytest
from hypothesis import given, strategies as st

from wallforge.partition import (FrobeniusForm, QTriple, classify, color_split, colored, colored_add, conjugate,
                                 core_quotient, count_partitions, dp0, enumerate_class, from_core_quotient,
                                 from_frobenius, n_weight, p0, partition, partitions, q_join, q_split,
                                 residue_counts, size, strip_rim_hooks, to_frobenius, values)
from wallforge.qseries import coeff, euler, expand

partitions_st = st.lists(st.integers(1, 9), max_size=8).map(partition)


def test_frobenius_of_the_textbook_shape():
    # (4,4,3,1,1,1) has a 3x3 Durfee square, so three diagonal hooks
    f = to_frobenius((4, 4, 3, 1, 1, 1))
    assert f == FrobeniusForm((3, 2, 0), (5, 1, 0)) or f == FrobeniusForm((5, 1, 0), (3, 2, 0))
    assert f.size == 14


def test_frobenius_orientation():
    # arms are measured along the columns, legs along the rows
    assert to_frobenius((4, 4, 3, 1, 1, 1)) == FrobeniusForm((5, 1, 0), (3, 2, 0))


def test_frobenius_empty():
    assert to_frobenius(()) == FrobeniusForm((), ())
    assert from_frobenius(FrobeniusForm((), ())) == ()


def test_frobenius_rejects_malformed():
    with pytest.raises(ValueError):
        FrobeniusForm((1, 1), (2, 0))
    with pytest.raises(ValueError):
        FrobeniusForm((1,), ())


def test_frobenius_round_trip_all_up_to_12():
    for m in range(13):
        for lam in partitions(m):
            assert from_frobenius(to_frobenius(lam)) == lam


def test_core_of_6531():
    core, quotient = core_quotient((6, 5, 3, 1), 4)
    assert core == (2, 1)
    assert n_weight((6, 5, 3, 1), 4) == 3
    assert from_core_quotient(core, quotient, 4) == (6, 5, 3, 1)
    assert strip_rim_hooks((6, 5, 3, 1), 4) == ((2, 1), 3)


def test_core_of_empty():
    assert core_quotient((), 3) == ((), ((), (), ()))


def test_core_quotient_rejects_small_n():
    with pytest.raises(ValueError):
        core_quotient((2, 1), 1)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_core_quotient_round_trip(n):
    for m in range(13):
        for lam in partitions(m):
            core, quot = core_quotient(lam, n)
            assert size(lam) == size(core) + n * sum(map(size, quot))
            assert from_core_quotient(core, quot, n) == lam
            assert strip_rim_hooks(lam, n) == (core, sum(map(size, quot)))


@given(partitions_st, st.integers(2, 5), st.integers(0, 3))
def test_core_quotient_ignores_bead_count(lam, n, extra):
    r = -(-len(lam) // n) * n
    assert core_quotient(lam, n, r) == core_quotient(lam, n, r + n * extra)


def test_classify():
    # (3,2,1) is itself a 2-core, so it is not in DP0
    assert classify((3, 2, 1)) == {"is_strict": True, "is_2_reduced": True, "in_DP0": False, "in_P0": False}
    assert all(classify(()).values())
    assert classify((2, 2)) == {"is_strict": False, "is_2_reduced": False, "in_DP0": False, "in_P0": True}
    assert classify((1, 1))["in_DP0"]


def test_color_split_worked_example():
    lam = colored([(5, "g"), 4, (3, "g"), (3, "g"), (2, "g"), 1])
    split = color_split(lam)
    assert split.white_part == (2, 2, 2, 2, 1, 1)
    assert split.reduced_part == colored([(3, "g"), 2, (1, "g"), (1, "g"), (1, "g")])
    assert split.reduced_plain == (3, 2, 1, 1, 1)


def test_color_split_all_white():
    split = color_split(colored([4]))
    assert split.white_part == (4,) and split.reduced_part == ()


def test_colored_add():
    assert colored_add(colored([(1, "g")]), colored([(2, "g")])) == ((3, "w"),)
    assert colored_add(colored([2]), colored([(3, "g")])) == ((5, "g"),)
    lam = colored([3, (2, "g")])
    assert colored_add(lam, ()) == lam
    # part by part: 2 + 1 is white, 1 (gray) + 1 (white) is gray
    assert colored_add(colored([2, (1, "g")]), colored([1, 1])) == ((3, "w"), (2, "g"))


def _brute_force_splits(lam):
    """All (white, reduced) pairs adding up to lam, by exhaustive search."""
    out = []
    k = len(lam)
    for red in itertools.product(range(0, max(values(lam)) + 1), repeat=k):
        if list(red) != sorted(red, reverse=True):
            continue
        nz = [r for r in red if r]
        if nz and (nz[-1] != 1 or any(a - b > 1 for a, b in zip(nz, nz[1:]))):
            continue
        white = [v - r for (v, _), r in zip(lam, red)]
        if min(white) < 0 or white != sorted(white, reverse=True):
            continue
        red_col = colored([(r, "g" if r % 2 else "w") for r in red])
        if colored_add(partition(white), red_col) == lam:
            out.append((partition(white), red_col))
    return out


def test_color_split_is_unique_for_small_inputs():
    from wallforge.partition import in_two_colored_class

    for m in range(1, 8):
        for lam in partitions(m):
            for colors in itertools.product("wg", repeat=len(lam)):
                cl = colored(list(zip(lam, colors)))
                if not in_two_colored_class(cl):
                    continue
                brute = _brute_force_splits(cl)
                if not brute:
                    with pytest.raises(ValueError):
                        color_split(cl)
                    continue
                assert len(brute) == 1
                s = color_split(cl)
                assert (s.white_part, s.reduced_part) == brute[0]


def test_residue_counts():
    assert residue_counts(colored([2])) == residue_counts(colored([2]))
    r = residue_counts(colored([2]))
    assert (r.r0, r.r1, r.rg0, r.rg1) == (1, 1, 0, 0)
    assert residue_counts(()) == residue_counts(colored([]))
    r = residue_counts(colored([(2, "g")] * 3 + [1, 1]))
    assert (r.r0, r.r1, r.rg0, r.rg1) == (3, 2, 2, 1)


def test_q_split_worked_example():
    lam = colored([7, 6, (4, "g"), (3, "g"), (3, "g"), (2, "g"), 1, 1])
    t = q_split(lam)
    assert t == QTriple((3, 3, 2, 2, 2, 2, 1, 1), (4, 3, 2, 1, 1), 1)
    assert t.m == 23
    t.validate()
    assert q_join(t) == lam


def test_qtriple_validation():
    with pytest.raises(ValueError):
        QTriple((), (), 1).validate()
    with pytest.raises(ValueError):
        QTriple((1,), (), 0).validate()
    with pytest.raises(ValueError):
        QTriple((1, 1), (1, 1, 1), 0).validate()


def test_class_sizes():
    assert len(enumerate_class("DP0", 3)) == 3
    assert enumerate_class("OP", 0) == [()]
    assert [len(enumerate_class("Q", m)) for m in range(9)] == list(expand(euler(2, 1) * euler(1, -2), 8).coeffs)


def test_dp0_counts_partitions():
    assert [sum(1 for _ in dp0(m)) for m in range(21)] == [count_partitions(m) for m in range(21)]


def test_p0_counts_bipartitions():
    s = expand(euler(1, -2), 12)
    assert [sum(1 for _ in p0(m)) for m in range(13)] == [coeff(s, m) for m in range(13)]


def test_dp0_is_conjugate_of_strict_empty_core():
    for m in range(8):
        ours = sorted(dp0(m))
        strict = sorted(conjugate(lam) for lam in ours)
        assert all(len(set(lam)) == len(lam) for lam in strict)


@given(partitions_st)
def test_conjugate_is_an_involution(lam):
    assert conjugate(conjugate(lam)) == lam

from fractions import Fraction

import pytest

from cyclefactor.bounds import (
    Source,
    UndefinedParameters,
    exact_n,
    feasible,
    feasible_k2,
    feasible_k3,
    feasible_k4,
    upper_bound,
)


@pytest.mark.parametrize(
    "k,l,n1,residue,upper",
    [(2, 3, 4, 0, 5), (3, 9, 18, 2, 18), (6, 9, 36, 0, 37)],
)
def test_upper_bound_examples(k, l, n1, residue, upper):
    rep = upper_bound(k, l)
    assert (rep.n1, rep.residue, rep.upper) == (n1, residue, upper)


def test_upper_bound_residue_two_refinement_needs_small_delta():
    # 2*2*5/3 = 20/3: n1 = 6, residue 2, delta = 2/3, so no refinement
    rep = upper_bound(2, 5)
    assert (rep.n1, rep.residue, rep.delta) == (6, 2, Fraction(2, 3))
    assert rep.upper == 7
    # 2*3*3/3 = 6 with l = 3: refinement needs l > 3
    assert upper_bound(3, 3).upper == 7


@pytest.mark.parametrize(
    "k,l,n1,upper",
    [
        (5, 7, 23, 23),  # n1 = 3 mod 4
        (4, 5, 13, 14),  # n1 = 1 mod 4
        (3, 7, 14, 14),  # n1 = 2 mod 4, delta = 0, l > 3
        (2, 6, 8, 9),  # n1 = 0 mod 4
    ],
)
def test_upper_bound_each_residue(k, l, n1, upper):
    rep = upper_bound(k, l)
    assert (rep.n1, rep.upper) == (n1, upper)


@pytest.mark.parametrize(
    "k,l,value,source",
    [
        (5, 3, 11, Source.L3),
        (6, 9, 37, Source.K_EVEN),
        (4, 6, 17, Source.K4),
        (2, 7, 10, Source.K2),
        (3, 9, 18, Source.K3),
        (5, 9, 30, Source.K_ODD),
        (2, 2, 4, Source.TWO_CYCLE_THRESHOLD),
        (4, 2, 6, Source.FOUR_CYCLE_THRESHOLD),
    ],
)
def test_exact_n(k, l, value, source):
    assert exact_n(k, l) == (value, source)


def test_exact_n_unknown():
    assert exact_n(5, 7) is None
    assert exact_n(6, 8) is None


@pytest.mark.parametrize("k,l", [(3, 4), (5, 6), (1, 3), (2, 1)])
def test_undefined_parameters(k, l):
    with pytest.raises(UndefinedParameters):
        exact_n(k, l)


def test_upper_bound_needs_l_above_two():
    with pytest.raises(UndefinedParameters):
        upper_bound(4, 2)


@pytest.mark.parametrize("n,l,ok", [(5, 3, True), (6, 3, False), (4, 2, True), (9, 6, True), (10, 6, False)])
def test_feasible_k2(n, l, ok):
    assert feasible_k2(n, l) is ok


@pytest.mark.parametrize("n,l,ok", [(7, 3, True), (8, 3, False), (10, 5, True), (6, 4, False), (11, 5, False)])
def test_feasible_k3(n, l, ok):
    assert feasible_k3(n, l) is ok


@pytest.mark.parametrize("n,l,ok", [(17, 6, True), (6, 2, True), (16, 5, False), (16, 6, True), (18, 6, False)])
def test_feasible_k4(n, l, ok):
    assert feasible_k4(n, l) is ok


def test_feasible_dispatch():
    assert feasible(5, 2, 3)
    with pytest.raises(ValueError):
        feasible(10, 5, 3)


def test_window_is_clipped_by_upper():
    assert upper_bound(3, 9).window() == (18, 18)
    assert upper_bound(6, 9).window() == (36, 37)

import itertools
import random

import pytest
from conftest import all_even, perms
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclefactor.calculus import (
    ConstructionError,
    FactorList,
    InfeasibleError,
    chain_factor,
    chain_length,
    lengthen,
    merge_even_pair,
    pad,
    parity_bridge,
    split_odd_cycle,
    two_cycle_factor,
    two_cycle_feasible,
)
from cyclefactor.perm import (
    Cycle,
    Permutation,
    PermutationError,
    compose,
    cycle,
    dcd_star,
    is_even,
    parse_perm,
    product,
)


def fl(*cycles):
    return FactorList(tuple(cycles), cycles[0].degree)


# -- two-cycle criterion ----------------------------------------------------

@pytest.mark.parametrize(
    "text,n,l1,l2,ok",
    [
        ("(1 2)(3 4 5 6)", 6, 3, 3, False),
        ("(1 2 3)(4 5 6)", 6, 3, 3, True),
        ("(1 2 3 4 5)", 5, 3, 3, True),
        ("(1 2)(3 4 5 6)", 6, 4, 2, True),
        ("(1 2 3)", 3, 2, 2, True),
        ("id", 4, 3, 3, True),
        ("id", 4, 3, 2, False),
    ],
)
def test_two_cycle_feasible(text, n, l1, l2, ok):
    assert two_cycle_feasible(parse_perm(text, n), l1, l2) is ok


def test_two_cycle_feasible_is_symmetric():
    q = parse_perm("(1 2 3 4)(5 6)", 7)
    for a, b in itertools.product(range(2, 8), repeat=2):
        assert two_cycle_feasible(q, a, b) == two_cycle_feasible(q, b, a)


def _check_pair(sigma, l1, l2, pair):
    c1, c2 = pair
    assert (len(c1), len(c2)) == (l1, l2)
    assert compose(c1.perm(), c2.perm()) == sigma


def test_two_cycle_factor_spec_examples():
    q = parse_perm("(1 2 3)", 3)
    _check_pair(q, 2, 2, two_cycle_factor(q, 2, 2))
    q = parse_perm("(1 2 3)(4 5 6)", 6)
    assert {c.points for c in two_cycle_factor(q, 3, 3)} == {(1, 2, 3), (4, 5, 6)}
    q = parse_perm("(1 2 3 4 5)", 5)
    _check_pair(q, 3, 3, two_cycle_factor(q, 3, 3))


def test_two_cycle_factor_rejects_infeasible():
    with pytest.raises(InfeasibleError, match="."):
        two_cycle_factor(parse_perm("(1 2)(3 4 5 6)", 6), 3, 3)


@pytest.mark.parametrize("n", range(2, 8))
def test_two_cycle_factor_complete(n):
    """Every feasible (sigma, l1, l2) on up to 7 points is constructed."""
    for images in itertools.permutations(range(1, n + 1)):
        q = Permutation(images)
        for l1 in range(2, n + 1):
            for l2 in range(2, n + 1):
                if two_cycle_feasible(q, l1, l2):
                    _check_pair(q, l1, l2, two_cycle_factor(q, l1, l2))


@settings(max_examples=200, deadline=None)
@given(perms(8, 60), st.data())
def test_two_cycle_factor_random(q, data):
    n = q.degree
    l1 = data.draw(st.integers(2, n))
    l2 = data.draw(st.integers(2, n))
    if two_cycle_feasible(q, l1, l2):
        _check_pair(q, l1, l2, two_cycle_factor(q, l1, l2))


# -- chaining ---------------------------------------------------------------

def test_chain_factor_examples():
    out = chain_factor(cycle(1, 2, 3, 4, 5, n=5), 3, 2)
    assert [c.points for c in out] == [(1, 2, 3), (3, 4, 5)]
    out = chain_factor(Cycle(tuple(range(1, 10)), 9), 5, 2)
    assert [c.points for c in out] == [(1, 2, 3, 4, 5), (5, 6, 7, 8, 9)]
    c = cycle(2, 4, 1, n=4)
    assert list(chain_factor(c, 3, 1)) == [c]


def test_chain_factor_rejects_wrong_length():
    with pytest.raises(InfeasibleError):
        chain_factor(cycle(1, 2, 3, 4, n=4), 3, 2)


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 9), st.integers(1, 6), st.randoms(use_true_random=False))
def test_chain_factor_product(l, t, rnd):
    L = chain_length(l, t)
    pts = list(range(1, L + 3))
    rnd.shuffle(pts)
    c = Cycle(tuple(pts[:L]), L + 2)
    out = chain_factor(c, l, t)
    assert len(out) == t and out.l == l
    assert out.product() == c.perm()


# -- even pair merge --------------------------------------------------------

@pytest.mark.parametrize(
    "a,b,expected",
    [
        ((1, 2), (3, 4), [(1, 3, 2), (3, 4, 1)]),
        ((1, 2, 3, 4), (5, 6), [(1, 3, 4), (1, 5, 2), (5, 6, 1)]),
        ((1, 2, 3, 4), (5, 6, 7, 8), [(1, 3, 4), (1, 5, 2), (5, 8, 1), (5, 6, 7)]),
    ],
)
def test_merge_even_pair_examples(a, b, expected):
    n = max(a + b)
    out = merge_even_pair(Cycle(a, n), Cycle(b, n))
    assert [c.points for c in out] == [Cycle(e, n).points for e in expected]
    assert product(out, n) == compose(Cycle(a, n).perm(), Cycle(b, n).perm())


def test_merge_even_pair_rejects_odd_or_overlapping():
    with pytest.raises(InfeasibleError):
        merge_even_pair(cycle(1, 2, 3, n=5), cycle(4, 5, n=5))
    with pytest.raises(InfeasibleError):
        merge_even_pair(cycle(1, 2, n=4), cycle(2, 3, n=4))


# -- padding ----------------------------------------------------------------

def test_pad_odd_length_splits_last_factor():
    out = pad(fl(cycle(1, 2, 3, n=3)), 2)
    assert [c.points for c in out] == [(1, 3, 2), (1, 3, 2)]


def test_pad_even_length_appends_inverse_pair():
    c = Cycle(tuple(range(1, 7)), 6)
    out = pad(fl(c), 3)
    assert len(out) == 3 and out.factors[0] == c
    assert out.product() == c.perm()


def test_pad_same_count_is_unchanged():
    f = fl(cycle(1, 2, 3, n=4), cycle(2, 3, 4, n=4))
    assert pad(f, 2) == f


def test_pad_empty_and_errors():
    out = pad(FactorList((), 5), 2, 3)
    assert [c.points for c in out] == [(1, 2, 3), (1, 3, 2)]
    with pytest.raises(InfeasibleError):
        pad(FactorList((), 5), 1, 3)
    with pytest.raises(InfeasibleError):
        pad(fl(cycle(1, 2, 3, 4, n=4)), 2)
    with pytest.raises(InfeasibleError):
        pad(fl(cycle(1, 2, 3, n=3), cycle(1, 2, 3, n=3)), 1)


def test_split_odd_cycle():
    c = Cycle(tuple(range(1, 8)), 7)
    a, b = split_odd_cycle(c)
    assert compose(a.perm(), b.perm()) == c.perm()
    with pytest.raises(InfeasibleError):
        split_odd_cycle(cycle(1, 2, n=2))


# -- lengthening ------------------------------------------------------------

def test_lengthen_two_transpositions_to_three_cycles():
    f = fl(cycle(1, 2, n=4), cycle(2, 3, n=4))
    out = lengthen(f, 1)
    assert out.l == 3 and len(out) == 2
    assert out.product() == parse_perm("(1 2 3)", 4)


def test_lengthen_three_factors_by_two():
    rng = random.Random(3)
    for _ in range(50):
        cs = [Cycle(tuple(rng.sample(range(1, 8), 3)), 7) for _ in range(3)]
        out = lengthen(FactorList(tuple(cs), 7), 2)
        assert out.l == 5 and len(out) == 3
        assert out.product() == product(cs, 7)


def test_lengthen_zero_and_bad_steps():
    f = fl(cycle(1, 2, n=4), cycle(2, 3, n=4))
    assert lengthen(f, 0) is f
    with pytest.raises(InfeasibleError):
        lengthen(f, 2)
    with pytest.raises(InfeasibleError):
        lengthen(fl(cycle(1, 2, 3, 4, n=4), cycle(1, 2, 3, 4, n=4)), 1)


@pytest.mark.parametrize("n", [5, 6])
def test_lengthen_even_count_exhaustive(n):
    """Every product of two l-cycles is also a product of two (l+1)-cycles."""
    for q in all_even(n):
        for l in range(2, n):
            if two_cycle_feasible(q, l, l):
                a, b = two_cycle_factor(q, l, l)
                assert lengthen(fl(a, b), 1).product() == q


# -- parity bridge ----------------------------------------------------------

def test_parity_bridge_transpositions():
    rho, phi = parse_perm("(1 2)", 4), parse_perm("(3 4)", 4)
    a, b = parity_bridge(rho, phi)
    assert a == compose(rho, parse_perm("(1 3)", 4))
    assert b == compose(parse_perm("(1 3)", 4), phi)
    assert compose(a, b) == compose(rho, phi)


def test_parity_bridge_keeps_cycle_count_of_left_part():
    rho, phi = parse_perm("(1 2 3 4)", 6), parse_perm("(5 6)", 6)
    a, b = parity_bridge(rho, phi)
    assert is_even(a) and is_even(b)
    assert compose(a, b) == compose(rho, phi)
    assert dcd_star(a).nc == dcd_star(rho).nc


def test_parity_bridge_rejections():
    with pytest.raises(InfeasibleError):
        parity_bridge(parse_perm("(1 2 3)", 5), parse_perm("(4 5)", 5))
    with pytest.raises(InfeasibleError):
        parity_bridge(parse_perm("(1 2)", 5), parse_perm("(2 3)", 5))
    with pytest.raises(InfeasibleError):
        parity_bridge(Permutation.identity(5), parse_perm("(2 3)", 5))
    with pytest.raises(PermutationError):
        parity_bridge(parse_perm("(1 2)", 4), parse_perm("(3 4)", 5))


def test_factor_list_rejects_mixed_lengths():
    with pytest.raises(PermutationError):
        FactorList((cycle(1, 2, n=3), cycle(1, 2, 3, n=3)), 3)


def test_errors_are_distinct_types():
    assert issubclass(InfeasibleError, ValueError)
    assert issubclass(ConstructionError, RuntimeError)

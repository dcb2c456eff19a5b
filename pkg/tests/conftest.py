import itertools

import pytest
from hypothesis import strategies as st

from cyclefactor.perm import Cycle, Permutation, is_even


def perms(n_min=1, n_max=12):
    return st.integers(n_min, n_max).flatmap(
        lambda n: st.permutations(range(1, n + 1)).map(lambda p: Permutation(p))
    )


def even_perms(n_min=1, n_max=12):
    return perms(n_min, n_max).filter(is_even)


@st.composite
def cycles_of(draw, n, length):
    pts = draw(st.permutations(range(1, n + 1)))
    return Cycle(tuple(pts[:length]), n)


def all_even(n):
    for p in itertools.permutations(range(1, n + 1)):
        q = Permutation(p)
        if is_even(q):
            yield q


@pytest.fixture
def p():
    from cyclefactor.perm import parse_perm

    return parse_perm

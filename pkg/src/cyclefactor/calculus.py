"""Constructive identities for writing permutations as products of cycles.

Everything here returns explicit cycles whose right-to-left product is
checked against the input before returning.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from itertools import permutations as _orderings

from .perm import (
    Cycle,
    Permutation,
    PermutationError,
    compose,
    dcd_star,
    disjoint,
    is_even,
    product,
)


class InfeasibleError(ValueError):
    """The requested factorization does not exist (or its hypotheses fail)."""


class ConstructionError(RuntimeError):
    """A construction that should succeed did not; this is a bug."""


@dataclass(frozen=True)
class FactorList:
    """An ordered list of cycles of one common length on a fixed degree."""

    factors: tuple[Cycle, ...]
    degree: int

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        lengths = {len(c) for c in self.factors}
        if len(lengths) > 1:
            raise PermutationError(f"factors of mixed lengths {sorted(lengths)}")
        for c in self.factors:
            if c.degree != self.degree:
                raise PermutationError(f"factor {c} has degree {c.degree}, expected {self.degree}")

    @property
    def l(self) -> int | None:
        return len(self.factors[0]) if self.factors else None

    def __len__(self) -> int:
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)

    def product(self) -> Permutation:
        return product(self.factors, self.degree)


def _check_product(factors: Sequence[Cycle | Permutation], target: Permutation, what: str) -> None:
    got = product(factors, target.degree)
    if got != target:
        raise ConstructionError(f"{what}: product {got} != target {target}")


# --------------------------------------------------------------------------
# Products of two cycles
# --------------------------------------------------------------------------

def two_cycle_feasible(sigma: Permutation, l1: int, l2: int) -> bool:
    """Can ``sigma`` be written as ``C1 * C2`` with cycles of lengths ``l1`` and ``l2``?

    The length order does not matter. Both lengths must fit in the degree.
    """
    l1, l2 = max(l1, l2), min(l1, l2)
    n = sigma.degree
    if l2 < 2 or l1 > n:
        return False
    d = dcd_star(sigma)
    m, r = d.m, d.nc
    if r == 2 and l1 + l2 == m and sorted(d.lengths()) == [l2, l1]:
        return True
    slack = l1 + l2 - m - r
    return slack >= 0 and slack % 2 == 0 and l1 - l2 <= m - r


def _explain_infeasible(sigma: Permutation, l1: int, l2: int) -> str:
    l1, l2 = max(l1, l2), min(l1, l2)
    d = dcd_star(sigma)
    m, r = d.m, d.nc
    if l2 < 2:
        return f"cycle length {l2} < 2"
    if l1 > sigma.degree:
        return f"cycle length {l1} exceeds degree {sigma.degree}"
    slack = l1 + l2 - m - r
    if slack < 0:
        return f"l1+l2={l1 + l2} < m+n={m + r}"
    if slack % 2:
        return f"l1+l2={l1 + l2} and m+n={m + r} differ in parity"
    return f"l1-l2={l1 - l2} > m-n={m - r}"


def _as_cycle(p: Permutation, length: int, what: str) -> Cycle:
    d = dcd_star(p)
    if d.nc != 1 or d.m != length:
        raise ConstructionError(f"{what}: expected a {length}-cycle, got {p}")
    return d.cycles[0]


def _transversal_pair(sigma: Permutation, blocks, p_lengths) -> tuple[Permutation, Permutation]:
    """Split each block (a cycle, or a fixed point as a 1-tuple) into two chained arcs
    and join the arcs through their shared points.

    Returns (C1, C2) as permutations with C1 * C2 = sigma.
    """
    n = sigma.degree
    a_arcs, b_arcs, shared = [], [], []
    for pts, p in zip(blocks, p_lengths):
        # pts = (c1 .. cL); A = (c1 .. cp), B = (cp .. cL); A * B = the block.
        a_arcs.append(pts[:p])
        b_arcs.append(pts[p - 1:])
        shared.append(pts[p - 1])
    x = Permutation.from_cycles([a for a in a_arcs if len(a) > 1], n)
    y = Permutation.from_cycles([b for b in b_arcs if len(b) > 1], n)
    if len(shared) > 1:
        e = Permutation.from_cycles([shared], n)
        return compose(x, e), compose(e.inverse(), y)
    return x, y


def _grow_right(sigma: Permutation, c1: Permutation, c2: Permutation) -> tuple[Permutation, Permutation]:
    """Given sigma = c1 * c2 (both cycles), lengthen c2 by two points taken from c1.

    c1 keeps its support and length. Needs two points of c1 outside c2 and one
    shared point.
    """
    d_inv = c2.inverse()
    dsupp = d_inv.support()
    c1_images = c1.images
    shared = [x for x in sorted(c1.support()) if x in dsupp]
    if not shared:
        raise ConstructionError("growth needs a point shared by both cycles")
    x0 = shared[0]
    walk = []
    y = c1_images[x0 - 1]
    while y != x0:
        if y not in dsupp:
            walk.append(y)
            if len(walk) == 2:
                break
        y = c1_images[y - 1]
    if len(walk) < 2:
        raise ConstructionError("growth needs two unshared points")
    u, v = walk
    # rotate d_inv so x0 is last, then append u, v
    pts = list(dcd_star(d_inv).cycles[0].points)
    i = pts.index(x0)
    pts = pts[i + 1:] + pts[:i + 1] + [u, v]
    new_d = Permutation.from_cycles([pts], sigma.degree)
    new_c1 = compose(sigma, new_d)
    return new_c1, new_d.inverse()


def _grow_left(sigma: Permutation, c1: Permutation, c2: Permutation) -> tuple[Permutation, Permutation]:
    b2, b1 = _grow_right(sigma.inverse(), c2.inverse(), c1.inverse())
    return b1.inverse(), b2.inverse()


def _distribute(total: int, caps: Sequence[int]) -> list[int]:
    """Positive parts summing to ``total`` with part i at most caps[i]."""
    parts = [1] * len(caps)
    rest = total - len(caps)
    for i, cap in enumerate(caps):
        take = min(rest, cap - 1)
        parts[i] += take
        rest -= take
    if rest:
        raise ConstructionError(f"cannot distribute {total} over caps {list(caps)}")
    return parts


def _search_two(sigma: Permutation, l1: int, l2: int, limit: int) -> tuple[Cycle, Cycle] | None:
    """Bounded exhaustive search for C1 * C2 = sigma; only for small degrees."""
    n = sigma.degree
    tried = 0
    points = range(1, n + 1)
    from itertools import combinations

    for subset in combinations(points, l1):
        first, rest = subset[0], subset[1:]
        for order in _orderings(rest):
            tried += 1
            if tried > limit:
                return None
            c1 = Cycle((first,) + order, n)
            rem = compose(c1.perm().inverse(), sigma)
            d = dcd_star(rem)
            if d.nc == 1 and d.m == l2:
                return c1, d.cycles[0]
    return None


SEARCH_LIMIT = 200_000


def two_cycle_factor(sigma: Permutation, l1: int, l2: int) -> tuple[Cycle, Cycle]:
    """Write ``sigma = C1 * C2`` with ``len(C1) == l1`` and ``len(C2) == l2``.

    Slack in the length budget is consumed first by threading fixed points
    through both cycles and then by growing one cycle two points at a time.
    """
    if not two_cycle_feasible(sigma, l1, l2):
        raise InfeasibleError(
            f"{sigma} is not a product of a {l1}-cycle and a {l2}-cycle: "
            + _explain_infeasible(sigma, l1, l2)
        )
    if l1 < l2:
        d1, d2 = two_cycle_factor(sigma.inverse(), l2, l1)
        return d2.inverse(), d1.inverse()
    n = sigma.degree
    d = dcd_star(sigma)
    m, r = d.m, d.nc
    lengths = d.lengths()

    if r == 2 and l1 + l2 == m and sorted(lengths) == [l2, l1]:
        a, b = sorted(d.cycles, key=len, reverse=True)
        return a, b

    if r == 0:
        c = Cycle(tuple(range(1, l1 + 1)), n)
        return c, c.inverse()

    s = (l1 + l2 - m - r) // 2
    fixed = [x for x in range(1, n + 1) if sigma(x) == x]
    f = min(s, len(fixed))
    extra = s - f
    blocks = [c.points for c in d.cycles] + [(x,) for x in fixed[:f]]
    m2, r2 = m + f, r + f

    result = None
    if extra == 0:
        c1, c2 = _transversal_pair(sigma, blocks, _distribute(l1, [len(b) for b in blocks]))
        result = (c1, c2)
    elif r2 == 1 and l1 == l2 == m2 and m2 % 2 == 1:
        # an odd cycle using every available point is the square of a cycle
        c = d.cycles[0].perm()
        half = (m2 + 1) // 2
        root = Permutation.identity(n)
        for _ in range(half):
            root = compose(root, c)
        result = (root, root)
    else:
        for a in range(extra + 1):
            b = extra - a
            p, q = l1 - 2 * a, l2 - 2 * b
            if min(p, q) < max(r2, 2) or max(p, q) > m2:
                continue
            if 2 * a > q - r2 or 2 * b > p - r2:
                continue
            c1, c2 = _transversal_pair(sigma, blocks, _distribute(p, [len(bl) for bl in blocks]))
            for _ in range(a):
                c1, c2 = _grow_left(sigma, c1, c2)
            for _ in range(b):
                c1, c2 = _grow_right(sigma, c1, c2)
            result = (c1, c2)
            break

    if result is not None:
        c1 = _as_cycle(result[0], l1, "two_cycle_factor")
        c2 = _as_cycle(result[1], l2, "two_cycle_factor")
        _check_product([c1, c2], sigma, "two_cycle_factor")
        return c1, c2

    found = _search_two(sigma, l1, l2, SEARCH_LIMIT) if n <= 12 else None
    if found is None:
        raise ConstructionError(f"no construction for {sigma} with lengths ({l1}, {l2})")
    return found


# --------------------------------------------------------------------------
# Chaining, padding, lengthening
# --------------------------------------------------------------------------

def chain_length(l: int, t: int) -> int:
    """Length of a single cycle that is a product of ``t`` overlapping l-cycles."""
    return l + (t - 1) * (l - 1)


def chain_factor(c: Cycle, l: int, t: int) -> FactorList:
    """Cut ``c`` into ``t`` l-cycles, consecutive ones sharing exactly one point."""
    if l < 2 or t < 1:
        raise InfeasibleError(f"need l >= 2 and t >= 1, got l={l}, t={t}")
    if len(c) != chain_length(l, t):
        raise InfeasibleError(f"cycle of length {len(c)} is not {t} chained {l}-cycles")
    pts = c.points
    out = [Cycle(pts[i * (l - 1): i * (l - 1) + l], c.degree) for i in range(t)]
    fl = FactorList(tuple(out), c.degree)
    _check_product(out, c.perm(), "chain_factor")
    return fl


def merge_even_pair(c1: Cycle, c2: Cycle) -> list[Cycle]:
    """Rewrite two disjoint even-length cycles as [A, T1, T2, B].

    A has length len(c1)-1, B has length len(c2)-1, T1 and T2 are 3-cycles.
    A (or B) is the identity when its source is a transposition and is then
    left out of the returned list.
    """
    if c1.degree != c2.degree:
        raise PermutationError("degree mismatch")
    if not disjoint(c1, c2):
        raise InfeasibleError(f"{c1} and {c2} are not disjoint")
    if len(c1) % 2 or len(c2) % 2:
        raise InfeasibleError("both cycles must have even length")
    n = c1.degree
    a, b = c1.points, c2.points
    out = []
    if len(a) > 2:
        out.append(Cycle((a[0],) + a[2:], n))
    out.append(Cycle((a[0], b[0], a[1]), n))
    out.append(Cycle((b[0], b[-1], a[0]), n))
    if len(b) > 2:
        out.append(Cycle(b[:-1], n))
    _check_product(out, compose(c1.perm(), c2.perm()), "merge_even_pair")
    return out


def _cycle_power(c: Cycle, e: int) -> Cycle:
    pts = c.points
    L = len(pts)
    # c^e sends pts[i] to pts[i+e]; for gcd(e, L) = 1 that is one cycle
    seq, i = [], 0
    for _ in range(L):
        seq.append(pts[i])
        i = (i + e) % L
    return Cycle(tuple(seq), c.degree)


def split_odd_cycle(c: Cycle) -> tuple[Cycle, Cycle]:
    """Two cycles of the same odd length whose product is ``c`` (both equal to a square root)."""
    if len(c) % 2 == 0:
        raise InfeasibleError("only odd cycles have a cycle square root")
    root = _cycle_power(c, (len(c) + 1) // 2)
    return root, root


def pad(f: FactorList, k_target: int, l: int | None = None) -> FactorList:
    """Raise the factor count to ``k_target`` without changing the product.

    Odd l: the last factor is replaced by two l-cycles (its square root twice).
    Even l: pairs (c, c^-1) are appended, so the count can only grow by 2.
    ``l`` is required when ``f`` is empty.
    """
    l = f.l if f.l is not None else l
    if l is None:
        raise InfeasibleError("cycle length unknown for an empty factor list")
    n = f.degree
    k = len(f)
    if k_target < k:
        raise InfeasibleError(f"cannot pad {k} factors down to {k_target}")
    if n < l:
        raise InfeasibleError(f"degree {n} < cycle length {l}")
    if l % 2 == 0 and (k_target - k) % 2:
        raise InfeasibleError(f"even l={l}: count can only change by multiples of 2")
    factors = list(f.factors)
    base = Cycle(tuple(range(1, l + 1)), n)
    if not factors and k_target > 0:
        if k_target == 1:
            raise InfeasibleError("the identity is not a single l-cycle")
        factors = [base, base.inverse()]
    while len(factors) < k_target:
        if l % 2:
            factors[-1:] = split_odd_cycle(factors[-1])
        else:
            factors += [base, base.inverse()]
    out = FactorList(tuple(factors), n)
    _check_product(out.factors, f.product(), "pad")
    return out


def lengthen(f: FactorList, steps: int) -> FactorList:
    """Same product and count, each factor longer by ``steps``.

    steps=1 needs an even count (factors are rewritten pairwise); steps=2 needs
    an odd count (rewritten by a sweep from the right).
    """
    if steps == 0:
        return f
    k, n, l = len(f), f.degree, f.l
    if k < 2 or l is None:
        raise InfeasibleError("lengthening needs at least two factors")
    if steps == 1 and k % 2 == 0:
        if l + 1 > n:
            raise InfeasibleError(f"even count: need l <= n-1, got l={l}, n={n}")
        out = []
        for i in range(0, k, 2):
            pair = product(f.factors[i:i + 2], n)
            out += two_cycle_factor(pair, l + 1, l + 1)
    elif steps == 2 and k % 2 == 1:
        if l + 2 > n:
            raise InfeasibleError(f"odd count: need l <= n-2, got l={l}, n={n}")
        fs = list(f.factors)
        out_rev = []
        head = fs.pop()
        while fs:
            left = fs.pop()
            a, b = two_cycle_factor(compose(left.perm(), head.perm()), l + 2, l + 2)
            out_rev.append(b)
            head = a
        out_rev.append(head)
        out = out_rev[::-1]
    else:
        raise InfeasibleError(f"steps={steps} not allowed for {k} factors")
    res = FactorList(tuple(out), n)
    _check_product(res.factors, f.product(), "lengthen")
    return res


def parity_bridge(rho: Permutation, phi: Permutation) -> tuple[Permutation, Permutation]:
    """Make two disjoint odd permutations even by inserting a shared transposition.

    With t = (u v), u = min supp(rho), v = min supp(phi), returns
    (rho * t, t * phi); their product is still rho * phi.
    """
    if rho.degree != phi.degree:
        raise PermutationError("degree mismatch")
    if rho.is_identity() or phi.is_identity():
        raise InfeasibleError("both parts must be nontrivial")
    if not disjoint(rho, phi):
        raise InfeasibleError("parts must be disjoint")
    if is_even(rho) or is_even(phi):
        raise InfeasibleError("both parts must be odd")
    u, v = min(rho.support()), min(phi.support())
    t = Permutation.from_cycles([(u, v)], rho.degree)
    a, b = compose(rho, t), compose(t, phi)
    if compose(a, b) != compose(rho, phi):
        raise ConstructionError("parity_bridge changed the product")
    return a, b


def cycles_product(cycles: Iterable[Cycle], n: int) -> Permutation:
    return product(list(cycles), n)

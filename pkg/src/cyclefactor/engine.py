"""Factorization of even permutations into k l-cycles.

The public entry point is :func:`factor`; it picks a construction by the
shape of (k, l, n) and returns a :class:`Certificate` that has been checked
by recomposition.  The regime-specific constructions (:func:`factor3`,
:func:`factor6`, :func:`factor_aux`) and the splitters (:func:`split_tau`,
:func:`split_support`) are exposed for direct use and testing.
"""

from __future__ import annotations

import random
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from functools import lru_cache

from . import bounds
from .calculus import (
    ConstructionError,
    FactorList,
    InfeasibleError,
    chain_factor,
    chain_length,
    lengthen,
    merge_even_pair,
    pad,
    parity_bridge,
    two_cycle_factor,
)
from .perm import Cycle, Permutation, compose, dcd_star, is_even, product


class OutOfRangeError(InfeasibleError):
    """No implemented result guarantees a factorization for these parameters."""


@dataclass(frozen=True)
class Certificate:
    """k l-cycles whose right-to-left product is ``target``."""

    n: int
    k: int
    l: int
    target: Permutation
    factors: FactorList
    provenance: tuple[str, ...] = field(default=())

    def check(self) -> bool:
        fs = self.factors.factors
        return (
            len(fs) == self.k
            and all(len(c) == self.l and c.degree == self.n for c in fs)
            and self.factors.product() == self.target
        )


@dataclass(frozen=True)
class SplitPair:
    """sigma = phi * tau with phi, tau disjoint unions of whole cycles of sigma."""

    phi: Permutation
    tau: Permutation
    epsilon: int | None = None
    case: str = ""

    @property
    def phi_support(self) -> int:
        return len(self.phi.support())

    @property
    def tau_support(self) -> int:
        return len(self.tau.support())


# --------------------------------------------------------------------------
# Helpers
# --------------------------------------------------------------------------

def _restrict_parts(sigma: Permutation, cycles: Sequence[Cycle]) -> Permutation:
    return Permutation.from_cycles((c.points for c in cycles), sigma.degree)


# --------------------------------------------------------------------------
# Cycle lengths reachable as a product of t l-cycles
# --------------------------------------------------------------------------

@lru_cache(maxsize=4096)
def _recipes(l: int, t: int, n: int) -> dict:
    """Map x -> how an x-cycle on n points is written as t l-cycles."""
    if t < 1:
        return {}
    if t == 1:
        return {l: ("single",)} if l <= n else {}
    out: dict = {}
    L = chain_length(l, t)
    if L <= n:
        out[L] = ("chain",)
    for t2 in range(1, t // 2 + 1):
        t1 = t - t2
        r1, r2 = _recipes(l, t1, n), _recipes(l, t2, n)
        for x1 in sorted(r1, reverse=True):
            for x2 in sorted(r2, reverse=True):
                lo, hi = abs(x1 - x2) + 1, min(n, x1 + x2 - 1)
                par = (x1 + x2 - 1) % 2
                for x in range(max(lo, 2), hi + 1):
                    if x % 2 == par and x not in out:
                        out[x] = ("pair", t1, x1, t2, x2)
    back = t - 1 if l % 2 else t - 2
    for x in _recipes(l, back, n):
        out.setdefault(x, ("pad", back))
    return out


def _cycle_factors(c: Cycle, t: int, l: int) -> list[Cycle]:
    recipe = _recipes(l, t, c.degree)[len(c)]
    kind = recipe[0]
    if kind == "single":
        return [c]
    if kind == "chain":
        return list(chain_factor(c, l, t).factors)
    if kind == "pair":
        _, t1, x1, t2, x2 = recipe
        a, b = two_cycle_factor(c.perm(), x1, x2)
        return _cycle_factors(a, t1, l) + _cycle_factors(b, t2, l)
    inner = _cycle_factors(c, recipe[1], l)
    return list(pad(FactorList(tuple(inner), c.degree), t).factors)


def _pair_ok(m: int, r: int, lengths: list[int], n: int, x1: int, x2: int) -> bool:
    x1, x2 = max(x1, x2), min(x1, x2)
    if x2 < 2 or x1 > n:
        return False
    if r == 2 and x1 + x2 == m and sorted(lengths) == [x2, x1]:
        return True
    slack = x1 + x2 - m - r
    return slack >= 0 and slack % 2 == 0 and x1 - x2 <= m - r


def plan_two(sigma: Permutation, k: int, l: int, trace: list | None = None) -> list[Cycle] | None:
    """Write sigma as C1 * C2 where each Ci is a cycle that is itself a product of
    ti l-cycles (t1 + t2 = k); None when no such split exists."""
    n = sigma.degree
    if l > n or k < 1 or (k * (l - 1)) % 2 != (0 if is_even(sigma) else 1):
        return None
    if sigma.is_identity():
        if k < 2:
            return None
        if trace is not None:
            trace.append(f"identity as {k} {l}-cycles")
        return list(pad(FactorList((), n), k, l).factors)
    d = dcd_star(sigma)
    single = _recipes(l, k, n)
    if d.nc == 1 and d.m in single:
        if trace is not None:
            trace.append(f"single {d.m}-cycle as {k} {l}-cycles")
        return _cycle_factors(d.cycles[0], k, l)
    m, r, lengths = d.m, d.nc, d.lengths()
    for t2 in range(k // 2, 0, -1):
        t1 = k - t2
        r1, r2 = _recipes(l, t1, n), _recipes(l, t2, n)
        for x1 in sorted(r1, reverse=True):
            for x2 in sorted(r2, reverse=True):
                if _pair_ok(m, r, lengths, n, x1, x2):
                    a, b = two_cycle_factor(sigma, x1, x2)
                    if trace is not None:
                        trace.append(f"two cycles ({x1},{x2}) as {t1}+{t2} {l}-cycles")
                    return _cycle_factors(a, t1, l) + _cycle_factors(b, t2, l)
    return None


# --------------------------------------------------------------------------
# Selecting whole cycles by support size and parity
# --------------------------------------------------------------------------

def _select(lengths: Sequence[int], accept: Callable[[int, int, int], bool],
            order: Callable[[tuple[int, int, int]], object] | None = None) -> list[int] | None:
    """Indices of a subset of cycles whose (support, count, parity) is accepted.

    Dynamic programming over reachable (support size, parity); count is the
    number of cycles in the chosen subset for the first path found.
    """
    reach: dict[tuple[int, int], tuple[int, list[int]]] = {(0, 0): (0, [])}
    for i, ln in enumerate(lengths):
        step = {}
        for (size, par), (cnt, idx) in reach.items():
            key = (size + ln, (par + ln + 1) % 2)
            if key not in reach and key not in step:
                step[key] = (cnt + 1, idx + [i])
        reach.update(step)
    cands = [(size, cnt, par) for (size, par), (cnt, _) in reach.items() if accept(size, cnt, par)]
    if not cands:
        return None
    best = min(cands, key=order) if order else min(cands)
    return reach[(best[0], best[2])][1]


def _pick_by_counts(d, counts: dict[int, int]) -> list[Cycle] | None:
    if any(c < 0 for c in counts.values()):
        return None
    chosen = []
    for length, want in counts.items():
        pool = [c for c in d.cycles if len(c) == length]
        if len(pool) < want:
            return None
        chosen += pool[:want]
    return chosen


def _tau_counts(d, k: int, l: int) -> tuple[str, dict[int, int]] | None:
    """Cycle-type of tau prescribed by the case analysis for fixed-point-free sigma."""
    h = d.histogram
    n2, n3 = h.get(2, 0), h.get(3, 0)
    q = l // 3
    if l == 9:
        return "l=9: six 2-cycles", {2: 6}
    if n2 >= 2 * q:
        return "2l/3 2-cycles", {2: 2 * q}
    threes = None
    if (4 * q + 1) % 3 == 0:
        threes = ("(4l/3+1)/3 3-cycles", {3: (4 * q + 1) // 3})
    elif (4 * q) % 3 == 0:
        threes = ("4l/9 3-cycles", {3: 4 * q // 3})
    else:
        threes = ("(4l/3-4)/3 3-cycles and two 2-cycles", {3: (4 * q - 4) // 3, 2: 2})
    if k > 6 or 3 * n3 >= 4 * q + 1:
        return threes
    if 9 * n3 >= 4 * q:
        if (4 * q + 1) % 3 == 0:
            u = (4 * q + 1) // 3
            table = {0: {2: u + 3, 3: (4 * q + 1) // 9 - 2},
                     1: {2: u + 3, 3: (4 * q - 2) // 9 - 2},
                     2: {2: u + 5, 3: (4 * q - 5) // 9 - 3}}
            return f"k=6 case I.{u % 3}", table[u % 3]
        if (4 * q) % 3 == 0:
            w = 4 * q // 3
            table = {0: {2: w, 3: 4 * q // 9},
                     1: {2: w + 2, 3: (4 * q - 3) // 9 - 1},
                     2: {2: w + 4, 3: (4 * q - 6) // 9 - 2}}
            return f"k=6 case II.{w % 3}", table[w % 3]
        v = (4 * q - 1) // 3
        table = {0: {2: v + 1, 3: (4 * q - 1) // 9},
                 1: {2: v + 1, 3: (4 * q - 4) // 9},
                 2: {2: v + 3, 3: (4 * q - 7) // 9 - 1}}
        return f"k=6 case III.{v % 3}", table[v % 3]
    if q % 2 == 0:
        return "k=6 4-cycles", {4: q}
    return "k=6 4-cycles and two 2-cycles", {4: q - 1, 2: 2}


def _tau_by_dp(d, sizes: Sequence[int]) -> list[Cycle] | None:
    order = {s: i for i, s in enumerate(sizes)}
    idx = _select(d.lengths(), lambda size, cnt, par: par == 0 and size in order,
                  order=lambda c: order[c[0]])
    return None if idx is None else [d.cycles[i] for i in idx]


def split_tau(sigma: Permutation, k: int, l: int) -> SplitPair:
    """Split a fixed-point-free even sigma of degree 2kl/3+1 into disjoint even parts
    phi (support 2(k-2)l/3+e) and tau (support 4l/3+1-e), e in {0, 1}."""
    n = sigma.degree
    if l < 9 or l % 3:
        raise InfeasibleError(f"splitter needs 3 | l and l >= 9, got l={l}")
    if k < 6 or k % 2:
        raise InfeasibleError(f"splitter needs even k >= 6, got k={k}")
    if n != 2 * k * l // 3 + 1:
        raise InfeasibleError(f"splitter needs degree 2kl/3+1 = {2 * k * l // 3 + 1}, got {n}")
    return _split_gamma(sigma, k, l)


def _split_gamma(sigma: Permutation, k: int, l: int) -> SplitPair:
    n = sigma.degree
    d = dcd_star(sigma)
    if not is_even(sigma):
        raise InfeasibleError("sigma must be even")
    if d.m != n:
        raise InfeasibleError("sigma must move every point")
    if 3 * d.nc <= n + 2:
        raise InfeasibleError("splitter not applicable: too few cycles (use the two-cycle route)")
    chosen, case = _gamma_choice(d, k, l)
    if chosen is None:
        raise ConstructionError(f"no admissible tau for {sigma}")
    tau = _restrict_parts(sigma, chosen)
    phi = compose(sigma, tau.inverse())
    eps = 4 * l // 3 + 1 - len(tau.support())
    return SplitPair(phi, tau, eps, case)


def _gamma_choice(d, k: int, l: int) -> tuple[list[Cycle] | None, str]:
    """Cycles forming tau: the counted choice first, subset selection otherwise."""
    big = 4 * l // 3 + 1
    plan = _tau_counts(d, k, l)
    if plan is not None:
        chosen = _pick_by_counts(d, plan[1])
        if chosen is not None and sum(len(c) for c in chosen) in (big, big - 1):
            return chosen, plan[0]
    return _tau_by_dp(d, [big, big - 1]), "subset selection"


def split_support(sigma: Permutation, m: int, prefer_even: bool = True) -> SplitPair:
    """Split sigma into nontrivial disjoint rho, phi (whole cycles) with
    |supp rho| <= m and |supp phi| <= n - m.  Returned as SplitPair(phi=rho, tau=phi)."""
    n = sigma.degree
    d = dcd_star(sigma)
    if n % 2:
        raise InfeasibleError(f"degree must be even, got {n}")
    if m % 2 or not 2 <= m <= n - 2:
        raise InfeasibleError(f"m must be even with 2 <= m <= n-2, got m={m}")
    if 3 * d.nc <= n + 1:
        raise InfeasibleError("needs more than (n+1)/3 cycles")
    lo, hi = d.m - (n - m), m
    idx = _select(
        d.lengths(),
        lambda size, cnt, par: 0 < size < d.m and lo <= size <= hi,
        order=(lambda c: (c[2], -c[0])) if prefer_even else (lambda c: -c[0]),
    )
    if idx is None:
        raise ConstructionError(f"no split of {sigma} with caps ({m}, {n - m})")
    rho = _restrict_parts(sigma, [d.cycles[i] for i in idx])
    return SplitPair(rho, compose(rho.inverse(), sigma))


# --------------------------------------------------------------------------
# l = 3
# --------------------------------------------------------------------------

def _f3(sigma: Permutation, k: int, trace: list) -> list[Cycle]:
    n = sigma.degree
    d = dcd_star(sigma)
    if d.nc == 0:
        return list(pad(FactorList((), n), k, 3).factors)
    if k == 1:
        if d.nc == 1 and d.m == 3:
            return [d.cycles[0]]
        raise ConstructionError(f"{sigma} is not a single 3-cycle")
    if d.nc == 1 and d.m == 2 * k + 1:
        # full-length cycle: cut at a shared point into two shorter odd cycles
        pts = d.cycles[0].points
        cut = k if k % 2 == 0 else k - 1
        left, right = Cycle(pts[: cut + 1], n), Cycle(pts[cut:], n)
        trace.append(f"l=3: split a {d.m}-cycle at a shared point")
        return _f3(left.perm(), cut // 2, trace) + _f3(right.perm(), k - cut // 2, trace)
    odd = [c for c in d.cycles if len(c) % 2]
    if odd:
        rho = max(odd, key=len)
        c_rho = (len(rho) - 1) // 2
        rest = compose(sigma, rho.perm().inverse())
        trace.append(f"l=3: peel an odd {len(rho)}-cycle")
        head = _f3(rho.perm(), c_rho, trace)
        if rest.is_identity():
            return list(pad(FactorList(tuple(head), n), k).factors)
        return head + _f3(rest, k - c_rho, trace)
    if d.m < 2 * k:
        trace.append(f"l=3: support {d.m} fits {d.m // 2} factors, pad to {k}")
        inner = _f3(sigma, d.m // 2, trace)
        return list(pad(FactorList(tuple(inner), n), k).factors)
    # every cycle even and m = 2k: merge cycles pairwise
    trace.append("l=3: merge even cycles pairwise")
    out: list[Cycle] = []
    cs = d.cycles
    for a, b in zip(cs[::2], cs[1::2]):
        parts = merge_even_pair(a, b)
        if len(a) > 2:
            out += _f3(parts[0].perm(), (len(a) - 2) // 2, trace)
            parts = parts[1:]
        tail = parts[2:]
        out += parts[:2]
        if tail:
            out += _f3(tail[0].perm(), (len(b) - 2) // 2, trace)
    return out


def _certify(sigma: Permutation, k: int, l: int, cycles: Sequence[Cycle], trace: list) -> Certificate:
    cert = Certificate(sigma.degree, k, l, sigma, FactorList(tuple(cycles), sigma.degree), tuple(trace))
    if not cert.check():
        raise ConstructionError(f"construction for {sigma} with (k, l) = ({k}, {l}) did not verify")
    return cert


def _need_even(sigma: Permutation) -> None:
    if not is_even(sigma):
        raise InfeasibleError(f"{sigma} is odd; a product of cycles of this length is even")


def factor3(sigma: Permutation, k: int) -> Certificate:
    """Write an even sigma moving at most 2k+1 points as k 3-cycles."""
    _need_even(sigma)
    if k < 2:
        raise InfeasibleError("need k >= 2")
    m = len(sigma.support())
    if m > 2 * k + 1:
        raise OutOfRangeError(f"sigma moves {m} points, more than 2k+1 = {2 * k + 1}")
    if sigma.degree < 3:
        raise InfeasibleError("degree below 3")
    trace: list = []
    return _certify(sigma, k, 3, _f3(sigma, k, trace), trace)


# --------------------------------------------------------------------------
# Few factors: two-cycle plans, disjoint splits, bridged splits
# --------------------------------------------------------------------------

PEEL_TRIES = 400


def _subsets(d) -> list[tuple[int, int, list[int]]]:
    """One representative subset of cycles for every reachable (support, parity)."""
    reach: dict[tuple[int, int], list[int]] = {(0, 0): []}
    for i, ln in enumerate(d.lengths()):
        for (size, par), idx in list(reach.items()):
            reach.setdefault((size + ln, (par + ln + 1) % 2), idx + [i])
    return [(size, par, idx) for (size, par), idx in reach.items()]


def _parts(sigma: Permutation, d, idx: list[int]) -> tuple[Permutation, Permutation]:
    a = _restrict_parts(sigma, [d.cycles[i] for i in idx])
    return a, compose(sigma, a.inverse())


def _split_solve(sigma: Permutation, k: int, l: int, trace: list,
                 solve_a: Callable, solve_b: Callable, k_a: int,
                 cap_a: int, cap_b: int, bridge: bool = True) -> list[Cycle] | None:
    """sigma = A * B with A, B unions of whole cycles (made even by a shared
    transposition when both are odd), A solved with k_a factors and B with the rest."""
    d = dcd_star(sigma)
    want_a = (k_a * (l - 1)) % 2
    want_b = ((k - k_a) * (l - 1)) % 2
    options = []
    for size, par, idx in _subsets(d):
        rest = d.m - size
        if par == want_a and size <= cap_a and rest <= cap_b:
            options.append((0, -size, idx))
        elif bridge and par != want_a and 0 < size and 0 < rest and size + 1 <= cap_a and rest + 1 <= cap_b:
            options.append((1, -size, idx))
    for bridged, _, idx in sorted(options):
        a, b = _parts(sigma, d, idx)
        if bridged:
            if is_even(a) == (want_a == 0) or is_even(b) == (want_b == 0):
                continue
            a, b = parity_bridge(a, b)
        elif is_even(b) != (want_b == 0):
            continue
        try:
            fa = solve_a(a, k_a, l, trace)
            fb = solve_b(b, k - k_a, l, trace)
        except (ConstructionError, InfeasibleError):
            continue
        if fa is None or fb is None:
            continue
        trace.append(f"{'bridged ' if bridged else ''}disjoint split into {k_a}+{k - k_a} factors")
        return fa + fb
    return None


def _plan_or_raise(sigma: Permutation, k: int, l: int, trace: list) -> list[Cycle]:
    out = plan_two(sigma, k, l, trace)
    if out is None:
        raise ConstructionError(f"no two-cycle plan for {sigma} with (k, l) = ({k}, {l})")
    return out


def _peel(sigma: Permutation, k: int, l: int, trace: list, seed: int = 0) -> list[Cycle] | None:
    """Seeded random search: strip one or two l-cycles and plan the rest."""
    n = sigma.degree
    if k < 3 or l > n:
        return None
    rng = random.Random(seed)
    drop = 1 if l % 2 else 2
    pts = list(range(1, n + 1))
    for _ in range(PEEL_TRIES):
        cs = [Cycle(tuple(rng.sample(pts, l)), n) for _ in range(drop)]
        rest = compose(product([c.inverse() for c in reversed(cs)], n), sigma)
        plan = plan_two(rest, k - drop, l)
        if plan is not None:
            trace.append(f"peeled {drop} random {l}-cycle(s)")
            return cs + plan
    return None


def _solve_small(sigma: Permutation, k: int, l: int, trace: list) -> list[Cycle]:
    n = sigma.degree
    if k == 1:
        d = dcd_star(sigma)
        if d.nc == 1 and d.m == l:
            return [d.cycles[0]]
        raise ConstructionError(f"{sigma} is not a single {l}-cycle")
    out = plan_two(sigma, k, l, trace)
    if out is not None:
        return out
    if k >= 4:
        cap = n
        out = _split_solve(sigma, k, l, trace, _plan_or_raise, _plan_or_raise, k // 2 if l % 2 == 0 else 2, cap, cap)
        if out is not None:
            return out
    out = _peel(sigma, k, l, trace)
    if out is not None:
        return out
    raise ConstructionError(f"no construction found for {sigma} as {k} {l}-cycles")


# --------------------------------------------------------------------------
# Few cycles: two long cycles, each chained into l-cycles
# --------------------------------------------------------------------------

def _padded(cycles: Sequence[Cycle], k: int, l: int, n: int) -> list[Cycle]:
    return list(pad(FactorList(tuple(cycles), n), k, l).factors)


def _aux(sigma: Permutation, k: int, l: int, trace: list) -> list[Cycle]:
    n = sigma.degree
    d = dcd_star(sigma)
    if d.nc == 0:
        trace.append("identity: pad")
        return _padded((), k, l, n)
    if k <= 4:
        return _solve_small(sigma, k, l, trace)
    m, r = d.m, d.nc
    if m <= l - 1:
        trace.append(f"few cycles, support {m} < l: four {m}-cycles, lengthen, pad")
        f = FactorList(tuple(_solve_small(sigma, 4, m, trace)), n)
        while f.l < l:
            f = lengthen(f, 1)
        return _padded(f.factors, k, l, n)
    if m <= 2 * l:
        trace.append(f"few cycles, l <= support {m} <= 2l: four {l}-cycles, pad")
        return _padded(_solve_small(sigma, 4, l, trace), k, l, n)
    s = 3
    while m + r > 2 * l + (s - 2) * (l - 1):
        s += 1
    if s == 3:
        t1, t2 = 2, 1
        x1, x2 = chain_length(l, 2), (l - 1 if l % 2 == 0 else l)
        if l % 2 == 0:
            t2 = 2
    elif s % 2 == 0:
        t1 = t2 = s // 2
        x1 = x2 = chain_length(l, t1)
    elif l % 2 == 0 or s + 1 <= k:
        t1 = t2 = (s + 1) // 2
        x1 = x2 = chain_length(l, t1)
    else:
        t1, t2 = (s + 1) // 2, s // 2
        x1, x2 = chain_length(l, t1), chain_length(l, t2)
    if t1 + t2 <= k and _pair_ok(m, r, d.lengths(), n, x1, x2):
        a, b = two_cycle_factor(sigma, x1, x2)
        trace.append(f"few cycles, s={s}: two cycles ({x1},{x2}) as {t1}+{t2} {l}-cycles")
        fa = list(chain_factor(a, l, t1).factors) if x1 == chain_length(l, t1) else _cycle_factors(a, t1, l)
        fb = list(chain_factor(b, l, t2).factors) if x2 == chain_length(l, t2) else _cycle_factors(b, t2, l)
        return _padded(fa + fb, k, l, n)
    trace.append(f"few cycles, s={s}: general two-cycle plan")
    return _plan_or_raise(sigma, k, l, trace)


def factor_aux(sigma: Permutation, k: int, l: int, n: int | None = None) -> Certificate:
    """Factor a sigma with few cycles (n_sigma <= (n+2)/3) as k l-cycles."""
    sigma = _at_degree(sigma, n)
    n = sigma.degree
    _need_even(sigma)
    if not (l % 2 == 1 and l >= 9) and not (l % 2 == 0 and l % 3 == 0 and l >= 12 and k % 2 == 0):
        raise OutOfRangeError(f"few-cycle route needs odd l >= 9, or even l >= 12 with 3 | l and even k; got l={l}, k={k}")
    if k < 2:
        raise InfeasibleError("need k >= 2")
    if not l <= n <= 2 * k * l // 3 + 1:
        raise OutOfRangeError(f"need l <= n <= 2kl/3+1 = {2 * k * l // 3 + 1}, got n={n}")
    nc = dcd_star(sigma).nc
    if k >= 3 and 3 * nc > n + 2:
        raise InfeasibleError(f"sigma has {nc} cycles, more than (n+2)/3: use splitter")
    trace: list = []
    return _certify(sigma, k, l, _aux(sigma, k, l, trace), trace)


def _at_degree(sigma: Permutation, n: int | None) -> Permutation:
    if n is None or n == sigma.degree:
        return sigma
    if n < sigma.degree and any(x > n for x in sigma.support()):
        raise InfeasibleError(f"sigma moves points above n={n}")
    return sigma.with_degree(n)


# --------------------------------------------------------------------------
# Many cycles: split off a part for two factors and recurse on k-2
# --------------------------------------------------------------------------

def _capacity(k: int, l: int) -> int:
    """Largest degree on which the recursion below is guaranteed to succeed."""
    if l == 6:
        return 4 * k + 1
    if k == 3:
        return 2 * l
    return 2 * k * l // 3 + (1 if k % 2 == 0 else 0)


def _tau_six(d) -> list[Cycle] | None:
    for counts in ({2: 4}, {3: 3}, {2: 1, 3: 1, 4: 1}):
        chosen = _pick_by_counts(d, counts)
        if chosen is not None:
            return chosen
    return None


def _solve_rec(sigma: Permutation, k: int, l: int, trace: list) -> list[Cycle]:
    n = sigma.degree
    d = dcd_star(sigma)
    if d.nc == 0:
        trace.append("identity: pad")
        return _padded((), k, l, n)
    if k <= 4:
        return _solve_small(sigma, k, l, trace)
    N = _capacity(k, l)
    if l == 6 and d.nc <= k + 1:
        x = 5 * k // 2 + 1
        if _pair_ok(d.m, d.nc, d.lengths(), n, x, x):
            a, b = two_cycle_factor(sigma, x, x)
            trace.append(f"l=6, at most k+1 cycles: two {x}-cycles, each {k // 2} chained 6-cycles")
            return list(chain_factor(a, 6, k // 2).factors) + list(chain_factor(b, 6, k // 2).factors)
        out = plan_two(sigma, k, l, trace)
        if out is not None:
            return out
    elif l != 6 and 3 * d.nc <= N + 2:
        try:
            return _aux(sigma, k, l, trace)
        except ConstructionError:
            pass
    cap_phi, cap_tau = _capacity(k - 2, l), _capacity(2, l)
    chosen, case = None, ""
    if l == 6 and d.m >= 4 * k:
        chosen, case = _tau_six(d), "l=6: tau of four 2-cycles, three 3-cycles or a 2-, 3- and 4-cycle"
    elif l >= 9 and k % 2 == 0 and d.m == N and 3 * d.nc > N + 2:
        chosen, case = _gamma_choice(d, k, l)
        case = f"split off tau ({case})"
    if chosen is not None:
        tau = _restrict_parts(sigma, chosen)
        phi = compose(sigma, tau.inverse())
        if len(phi.support()) <= cap_phi and len(tau.support()) <= cap_tau:
            try:
                head = _solve_rec(phi, k - 2, l, trace)
                tail = _solve_small(tau, 2, l, trace)
                trace.append(case)
                return head + tail
            except ConstructionError:
                pass
    out = _split_solve(sigma, k, l, trace, _solve_rec, _solve_small, k - 2, cap_phi, cap_tau)
    if out is not None:
        return out
    out = plan_two(sigma, k, l, trace) or _peel(sigma, k, l, trace)
    if out is None:
        raise ConstructionError(f"no construction found for {sigma} as {k} {l}-cycles")
    return out


def factor6(sigma: Permutation, k: int, n: int | None = None) -> Certificate:
    """Write an even sigma of degree n <= 4k+1 (k even) as k 6-cycles."""
    sigma = _at_degree(sigma, n)
    n = sigma.degree
    _need_even(sigma)
    if k < 2 or k % 2:
        raise InfeasibleError(f"need even k >= 2, got k={k}")
    if n < 6:
        raise InfeasibleError(f"degree {n} is below the cycle length 6")
    if n > 4 * k + 1:
        raise OutOfRangeError(f"degree {n} exceeds 4k+1 = {4 * k + 1}")
    trace: list = []
    return _certify(sigma, k, 6, _solve_rec(sigma, k, 6, trace), trace)


# --------------------------------------------------------------------------
# Dispatcher
# --------------------------------------------------------------------------

def regime(k: int, l: int, n: int) -> str | None:
    """Name of the route that covers every even permutation of degree n, or None."""
    if k in (2, 3, 4) and bounds.feasible(n, k, l):
        return "threshold"
    if k < 2 or l < 2 or l > n:
        return None
    if l == 3 and n <= 2 * k + 1:
        return "l=3"
    if l == 6 and k % 2 == 0 and n <= 4 * k + 1:
        return "l=6"
    if l % 3 == 0 and l >= 9 and k % 2 == 0 and n <= 2 * k * l // 3 + 1:
        return "3|l, even k"
    if l % 3 == 0 and l >= 9 and l % 2 and k % 2 and n <= 2 * k * l // 3:
        return "3|l, odd k"
    return None


def factor(sigma: Permutation, k: int, l: int, n: int | None = None) -> Certificate:
    """Write an even sigma as k l-cycles, choosing the construction by (k, l, n).

    Raises OutOfRangeError when no implemented result covers (k, l, n); for odd
    l >= 9 outside those regimes, sigma with at most (n+2)/3 cycles is still accepted.
    """
    sigma = _at_degree(sigma, n)
    n = sigma.degree
    _need_even(sigma)
    if k < 1 or l < 2:
        raise InfeasibleError(f"need k >= 1 and l >= 2, got k={k}, l={l}")
    if l > n:
        raise InfeasibleError(f"no {l}-cycle exists on {n} points")
    route = regime(k, l, n)
    trace: list = []
    if route is None:
        nc = dcd_star(sigma).nc
        if l % 2 and l >= 9 and n <= 2 * k * l // 3 + 1 and 3 * nc <= n + 2:
            route = "few cycles"
        else:
            raise OutOfRangeError(f"out of proven range: no implemented result covers (k, l, n) = ({k}, {l}, {n})")
    trace.append(f"route: {route}")
    if l == 3:
        cycles = _f3(sigma, k, trace)
    elif route == "few cycles":
        cycles = _aux(sigma, k, l, trace)
    else:
        cycles = _solve_rec(sigma, k, l, trace)
    return _certify(sigma, k, l, cycles, trace)

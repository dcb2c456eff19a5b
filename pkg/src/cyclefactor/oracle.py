"""Brute-force ground truth for small degrees.

Which even permutations of n points are products of k l-cycles, the largest
n for which all of them are, and an independent certificate checker.

Products of l-cycles form unions of conjugacy classes (the set of l-cycles is
closed under conjugation), so reachability is tracked per cycle type: one
representative per class is multiplied by every l-cycle.  ``mode="elements"``
runs the plain element-by-element frontier over a rank-indexed bit table and
is kept for cross-checking at small n.
"""

from __future__ import annotations

import csv
import io
import itertools
import math
import warnings
from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from . import bounds
from .calculus import two_cycle_feasible
from .perm import Permutation

MAX_EXHAUSTIVE = 9


class OracleGuardError(ValueError):
    """The request is too large for exhaustive enumeration."""


# --------------------------------------------------------------------------
# Lehmer ranking
# --------------------------------------------------------------------------

def rank(p: Permutation) -> int:
    """Position of ``p`` in lexicographic order of image tuples (0 for the identity)."""
    rest = list(range(1, p.degree + 1))
    r = 0
    for i, y in enumerate(p.images):
        j = rest.index(y)
        r += j * math.factorial(p.degree - 1 - i)
        rest.pop(j)
    return r


def unrank(i: int, n: int) -> Permutation:
    if n < 1 or not 0 <= i < math.factorial(n):
        raise ValueError(f"rank {i} outside 0..{n}!-1")
    rest = list(range(1, n + 1))
    images = []
    for pos in range(n - 1, -1, -1):
        j, i = divmod(i, math.factorial(pos))
        images.append(rest.pop(j))
    return Permutation(images, check=False)


# --------------------------------------------------------------------------
# Cycle types
# --------------------------------------------------------------------------

def cycle_type(images: tuple[int, ...]) -> tuple[int, ...]:
    """Cycle lengths (fixed points included), largest first."""
    n = len(images)
    seen = bytearray(n + 1)
    out = []
    for s in range(1, n + 1):
        if seen[s]:
            continue
        ln, x = 0, s
        while not seen[x]:
            seen[x] = 1
            x = images[x - 1]
            ln += 1
        out.append(ln)
    return tuple(sorted(out, reverse=True))


def class_size(ctype: tuple[int, ...]) -> int:
    n = sum(ctype)
    denom = 1
    for ln, mult in _multiplicities(ctype):
        denom *= ln ** mult * math.factorial(mult)
    return math.factorial(n) // denom


def _multiplicities(ctype: tuple[int, ...]) -> Iterator[tuple[int, int]]:
    for ln, group in itertools.groupby(ctype):
        yield ln, len(list(group))


def _type_is_even(ctype: tuple[int, ...]) -> bool:
    return sum(ln - 1 for ln in ctype) % 2 == 0


def partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def _type_rep(ctype: tuple[int, ...]) -> Permutation:
    cycles, start = [], 1
    for ln in ctype:
        cycles.append(range(start, start + ln))
        start += ln
    return Permutation.from_cycles([c for c in cycles if len(c) > 1], sum(ctype))


def l_cycles(n: int, l: int) -> list[tuple[int, ...]]:
    """Image tuples of every l-cycle on n points."""
    out = []
    for pts in itertools.combinations(range(1, n + 1), l):
        head, tail = pts[0], pts[1:]
        for order in itertools.permutations(tail):
            images = list(range(1, n + 1))
            seq = (head,) + order
            for a, b in zip(seq, seq[1:] + seq[:1]):
                images[a - 1] = b
            out.append(tuple(images))
    return out


# --------------------------------------------------------------------------
# Reachability
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class ReachReport:
    n: int
    l: int
    k: int
    covered: bool
    reached_count: int
    witness_missing: Permutation | None
    reached_types: frozenset


def _check_guard(n: int, l: int, k: int) -> None:
    if n > MAX_EXHAUSTIVE:
        raise OracleGuardError(f"exhaustive mode is limited to n <= {MAX_EXHAUSTIVE}, got n={n}")
    if not 2 <= l <= n:
        raise OracleGuardError(f"need 2 <= l <= n, got l={l}, n={n}")
    if k < 1:
        raise OracleGuardError("need k >= 1")


def _reach_types(n: int, l: int, k: int) -> frozenset:
    gens = l_cycles(n, l)
    reps = {cycle_type(tuple(range(1, n + 1))): tuple(range(1, n + 1))}
    for _ in range(k):
        nxt: dict = {}
        for rep in reps.values():
            for g in gens:
                img = tuple(rep[y - 1] for y in g)
                t = cycle_type(img)
                if t not in nxt:
                    nxt[t] = img
        reps = nxt
    return frozenset(reps)


def _reach_elements(n: int, l: int, k: int) -> bytearray:
    gens = l_cycles(n, l)
    total = math.factorial(n)
    frontier = {tuple(range(1, n + 1))}
    for _ in range(k):
        frontier = {tuple(p[y - 1] for y in g) for p in frontier for g in gens}
    table = bytearray(total)
    for p in frontier:
        table[rank(Permutation(p, check=False))] = 1
    return table


def class_power_reach(n: int, l: int, k: int, mode: str = "classes") -> ReachReport:
    """Which even permutations of n points are products of exactly k l-cycles."""
    _check_guard(n, l, k)
    half = math.factorial(n) // 2 if n > 1 else 1
    if mode == "classes":
        types = _reach_types(n, l, k)
        reached = sum(class_size(t) for t in types if _type_is_even(t))

        def hit(p: Permutation) -> bool:
            return cycle_type(p.images) in types
    elif mode == "elements":
        table = _reach_elements(n, l, k)
        types = frozenset(cycle_type(unrank(r, n).images) for r in range(len(table)) if table[r])
        reached = sum(1 for r in range(len(table)) if table[r] and _type_is_even(cycle_type(unrank(r, n).images)))

        def hit(p: Permutation) -> bool:
            return bool(table[rank(p)])
    else:
        raise ValueError(f"unknown mode {mode!r}")
    covered = reached == half
    witness = None
    if not covered:
        for r in range(math.factorial(n)):
            p = unrank(r, n)
            if _type_is_even(cycle_type(p.images)) and not hit(p):
                witness = p
                break
    return ReachReport(n, l, k, covered, reached, witness, types)


def _covered(n: int, l: int, k: int) -> bool:
    if n < l:
        return False
    if k == 2:
        return all(
            two_cycle_feasible(_type_rep(t), l, l)
            for t in partitions(n) if _type_is_even(t)
        )
    return class_power_reach(n, l, k).covered


@dataclass(frozen=True)
class CoverageScan:
    k: int
    l: int
    covered: dict[int, bool]
    value: int
    anomalies: tuple[int, ...]


def coverage_scan(k: int, l: int, n_max: int) -> CoverageScan:
    """Coverage for every n in l..n_max; anomalies are covered n above an uncovered one."""
    if k != 2 and n_max > MAX_EXHAUSTIVE:
        raise OracleGuardError(f"k={k} needs n_max <= {MAX_EXHAUSTIVE}")
    flags = {n: _covered(n, l, k) for n in range(max(l, 2), n_max + 1)}
    value = max((n for n, ok in flags.items() if ok), default=0)
    first_gap = min((n for n, ok in flags.items() if not ok), default=None)
    anomalies = tuple(n for n, ok in flags.items() if ok and first_gap is not None and n > first_gap)
    return CoverageScan(k, l, flags, value, anomalies)


def exact_n_oracle(k: int, l: int, n_max: int) -> int:
    """Largest n <= n_max with every even permutation of n points a product of k l-cycles (0 if none)."""
    scan = coverage_scan(k, l, n_max)
    if scan.anomalies:
        warnings.warn(f"coverage for (k, l) = ({k}, {l}) is not monotone in n: {scan.anomalies}")
    return scan.value


# --------------------------------------------------------------------------
# Certificate checking
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _is_l_cycle(points: Iterable[int], l: int, n: int) -> bool:
    pts = list(points)
    return len(pts) == l and len(set(pts)) == l and all(1 <= x <= n for x in pts)


def verify(cert) -> Verdict:
    """Recompose a certificate's factors from scratch and compare with its target."""
    n, k, l = cert.n, cert.k, cert.l
    factors = list(cert.factors)
    if len(factors) != k:
        return Verdict(False, f"expected {k} factors, found {len(factors)}")
    images = list(range(1, n + 1))
    for i, c in enumerate(factors):
        pts = list(c.points)
        if not _is_l_cycle(pts, l, n):
            return Verdict(False, f"factor {i + 1} {pts} is not an {l}-cycle on {n} points")
    for c in reversed(factors):
        pts = list(c.points)
        step = dict(zip(pts, pts[1:] + pts[:1]))
        images = [step.get(y, y) for y in images]
    target = list(cert.target.images)
    if len(target) != n:
        return Verdict(False, f"target has degree {len(target)}, certificate says {n}")
    if images != target:
        bad = next(x for x in range(1, n + 1) if images[x - 1] != target[x - 1])
        return Verdict(False, f"product sends {bad} to {images[bad - 1]}, target sends it to {target[bad - 1]}")
    return Verdict(True)


# --------------------------------------------------------------------------
# Cross-tabulation
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class TableRow:
    k: int
    l: int
    oracle: int
    closed_form: int | None
    upper: int | None
    agrees: bool | None


def table(k_range: Iterable[int], l_range: Iterable[int], n_max: int) -> list[TableRow]:
    """Oracle value next to the closed form and upper bound for each defined (k, l)."""
    rows = []
    for k in k_range:
        for l in l_range:
            try:
                found = bounds.exact_n(k, l)
            except bounds.UndefinedParameters:
                continue
            closed = found[0] if found else None
            upper = bounds.upper_bound(k, l).upper if l > 2 else None
            value = exact_n_oracle(k, l, n_max)
            agrees = None if closed is None else value == min(closed, n_max)
            rows.append(TableRow(k, l, value, closed, upper, agrees))
    return rows


_HEADER = ("k", "l", "oracle", "closed_form", "upper", "agrees")


def format_table(rows: Iterable[TableRow], as_csv: bool = False) -> str:
    cells = [_HEADER] + [
        tuple("" if v is None else str(v) for v in (r.k, r.l, r.oracle, r.closed_form, r.upper, r.agrees))
        for r in rows
    ]
    if as_csv:
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(cells)
        return buf.getvalue()
    widths = [max(len(row[i]) for row in cells) for i in range(len(_HEADER))]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in cells) + "\n"

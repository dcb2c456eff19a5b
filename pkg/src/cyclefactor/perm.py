"""Permutations on {1..n}, cycles, and disjoint cycle decompositions.

Products are evaluated right to left: ``compose(p, q)`` maps ``x`` to
``p(q(x))``, and ``p * q`` means the same thing.  Every permutation carries
its ambient degree, so ``(1 2 3)`` on 3 points and on 5 points are
different values.
"""

from __future__ import annotations

import re
from collections import Counter
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field


class PermutationError(ValueError):
    """Raised for malformed permutations, cycles or cycle-notation text."""


class Permutation:
    """A bijection of {1..degree}, stored as the tuple of images of 1..n."""

    __slots__ = ("_images", "_hash")

    def __init__(self, images: Iterable[int], check: bool = True):
        images = tuple(images)
        if check:
            n = len(images)
            if n < 1:
                raise PermutationError("degree must be at least 1")
            if sorted(images) != list(range(1, n + 1)):
                raise PermutationError(f"{images} is not a bijection on 1..{n}")
        self._images = images
        self._hash = None

    @classmethod
    def identity(cls, n: int) -> Permutation:
        if n < 1:
            raise PermutationError("degree must be at least 1")
        return cls(range(1, n + 1), check=False)

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int) -> Permutation:
        """Build from disjoint cycles given as point sequences."""
        images = list(range(n + 1))
        seen: set[int] = set()
        for c in cycles:
            pts = tuple(c)
            for x in pts:
                if not 1 <= x <= n:
                    raise PermutationError(f"point {x} outside 1..{n}")
                if x in seen:
                    raise PermutationError(f"repeated point {x}")
                seen.add(x)
            for a, b in zip(pts, pts[1:] + pts[:1]):
                images[a] = b
        return cls(images[1:], check=False)

    @property
    def degree(self) -> int:
        return len(self._images)

    @property
    def images(self) -> tuple[int, ...]:
        return self._images

    def __call__(self, x: int) -> int:
        return self._images[x - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._images == other._images

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._images)
        return self._hash

    def __repr__(self) -> str:
        return f"Permutation({format_perm(self)!r}, n={self.degree})"

    def __str__(self) -> str:
        return format_perm(self)

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for i, y in enumerate(self._images, start=1):
            inv[y - 1] = i
        return Permutation(inv, check=False)

    def support(self) -> frozenset[int]:
        return frozenset(i for i, y in enumerate(self._images, start=1) if i != y)

    def is_identity(self) -> bool:
        return all(i == y for i, y in enumerate(self._images, start=1))

    def extend(self, n: int) -> Permutation:
        """The same permutation viewed on a larger degree ``n``."""
        if n < self.degree:
            raise PermutationError(f"cannot shrink degree {self.degree} to {n}")
        return Permutation(self._images + tuple(range(self.degree + 1, n + 1)), check=False)

    def restrict(self, n: int) -> Permutation:
        """The same permutation viewed on a smaller degree; points above ``n`` must be fixed."""
        if any(self._images[i] != i + 1 for i in range(n, self.degree)):
            raise PermutationError(f"permutation moves points above {n}")
        return Permutation(self._images[:n], check=False)

    def with_degree(self, n: int) -> Permutation:
        return self.extend(n) if n >= self.degree else self.restrict(n)


@dataclass(frozen=True)
class Cycle:
    """A cycle of length >= 2, rotated so that its smallest point comes first."""

    points: tuple[int, ...]
    degree: int

    def __post_init__(self):
        pts = tuple(self.points)
        if len(pts) < 2:
            raise PermutationError("a cycle needs at least two points")
        if len(set(pts)) != len(pts):
            raise PermutationError(f"repeated point in cycle {pts}")
        if min(pts) < 1 or max(pts) > self.degree:
            raise PermutationError(f"cycle {pts} does not fit in degree {self.degree}")
        i = pts.index(min(pts))
        object.__setattr__(self, "points", pts[i:] + pts[:i])

    def __len__(self) -> int:
        return len(self.points)

    @property
    def length(self) -> int:
        return len(self.points)

    def perm(self) -> Permutation:
        return Permutation.from_cycles([self.points], self.degree)

    def inverse(self) -> Cycle:
        return Cycle(self.points[::-1], self.degree)

    def with_degree(self, n: int) -> Cycle:
        return Cycle(self.points, n)

    def __str__(self) -> str:
        return "(" + " ".join(map(str, self.points)) + ")"


def cycle(*points: int, n: int) -> Cycle:
    return Cycle(tuple(points), n)


@dataclass(frozen=True)
class CycleDecomposition:
    """Nontrivial disjoint cycles of a permutation in canonical order."""

    cycles: tuple[Cycle, ...]
    degree: int
    m: int = field(init=False)
    nc: int = field(init=False)
    histogram: dict[int, int] = field(init=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "m", sum(len(c) for c in self.cycles))
        object.__setattr__(self, "nc", len(self.cycles))
        object.__setattr__(self, "histogram", dict(sorted(Counter(len(c) for c in self.cycles).items())))

    def lengths(self) -> list[int]:
        return [len(c) for c in self.cycles]

    def recompose(self) -> Permutation:
        return Permutation.from_cycles((c.points for c in self.cycles), self.degree)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Right-to-left product: the result sends ``x`` to ``p(q(x))``."""
    if p.degree != q.degree:
        raise PermutationError(f"degree mismatch: {p.degree} vs {q.degree}")
    pi = p.images
    return Permutation([pi[y - 1] for y in q.images], check=False)


def product(perms: Iterable[Permutation | Cycle], n: int) -> Permutation:
    """Right-to-left product of a sequence; the empty product is the identity."""
    images = list(range(1, n + 1))
    for f in reversed(list(perms)):
        if isinstance(f, Cycle):
            if f.degree != n:
                raise PermutationError(f"degree mismatch: {f.degree} vs {n}")
            pts = f.points
            step = {a: b for a, b in zip(pts, pts[1:] + pts[:1])}
            images = [step.get(y, y) for y in images]
        else:
            if f.degree != n:
                raise PermutationError(f"degree mismatch: {f.degree} vs {n}")
            fi = f.images
            images = [fi[y - 1] for y in images]
    return Permutation(images, check=False)


def dcd_star(p: Permutation) -> CycleDecomposition:
    n = p.degree
    images = p.images
    seen = [False] * (n + 1)
    cycles = []
    for start in range(1, n + 1):
        if seen[start] or images[start - 1] == start:
            continue
        pts = []
        x = start
        while not seen[x]:
            seen[x] = True
            pts.append(x)
            x = images[x - 1]
        cycles.append(Cycle(tuple(pts), n))
    return CycleDecomposition(tuple(cycles), n)


def is_even(p: Permutation) -> bool:
    d = dcd_star(p)
    return (d.m + d.nc) % 2 == 0


def is_fixed_point_free(p: Permutation) -> bool:
    return dcd_star(p).m == p.degree


def disjoint(*perms: Permutation | Cycle) -> bool:
    seen: set[int] = set()
    for p in perms:
        s = set(p.points) if isinstance(p, Cycle) else p.support()
        if seen & s:
            return False
        seen |= s
    return True


_CYCLE_RE = re.compile(r"\(([^()]*)\)")
_DEGREE_RE = re.compile(r"^\s*deg\s*=\s*(\d+)\s*;")


def parse_perm(text: str, n: int | None = None) -> Permutation:
    """Parse cycle notation such as ``"(1 2 3)(4 5)"``; ``"id"`` and ``"()"`` mean identity.

    The degree comes from ``n`` or from a leading ``deg=N;`` prefix. Cycles
    must be disjoint; separators may be spaces or commas.
    """
    m = _DEGREE_RE.match(text)
    if m:
        prefixed = int(m.group(1))
        if n is not None and n != prefixed:
            raise PermutationError(f"degree prefix {prefixed} disagrees with n={n}")
        n = prefixed
        text = text[m.end():]
    if n is None:
        raise PermutationError("degree not given")
    body = text.strip()
    if body in ("id", "()", ""):
        return Permutation.identity(n)
    if _CYCLE_RE.sub("", body).strip():
        raise PermutationError(f"malformed cycle notation: {text!r}")
    cycles = []
    for group in _CYCLE_RE.findall(body):
        tokens = [t for t in re.split(r"[\s,]+", group.strip()) if t]
        try:
            pts = [int(t) for t in tokens]
        except ValueError:
            raise PermutationError(f"non-integer point in {group!r}") from None
        if len(pts) == 1:
            if not 1 <= pts[0] <= n:
                raise PermutationError(f"point {pts[0]} outside 1..{n}")
            pts = []
        if pts:
            cycles.append(pts)
    # from_cycles rejects repeated points and out-of-range points
    return Permutation.from_cycles(cycles, n)


def format_perm(p: Permutation | Cycle) -> str:
    if isinstance(p, Cycle):
        return str(p)
    cycles = dcd_star(p).cycles
    if not cycles:
        return "id"
    return "".join(str(c) for c in cycles)


def parse_cycle(text: str, n: int) -> Cycle:
    d = dcd_star(parse_perm(text, n))
    if d.nc != 1:
        raise PermutationError(f"{text!r} is not a single cycle")
    return d.cycles[0]

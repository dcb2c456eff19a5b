"""Closed-form values and bounds for n(k, l).

n(k, l) is the largest n such that every even permutation of n points is a
product of k l-cycles. It is only defined when l is odd or k is even.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction


class UndefinedParameters(ValueError):
    """n(k, l) has no meaning for these parameters (l even and k odd, or too small)."""


class Source(str, enum.Enum):
    """Which closed-form result a value comes from."""

    TWO_CYCLE_THRESHOLD = "k=2 threshold: floor(3n/4) <= l <= n, or (n,l)=(4,2)"
    THREE_CYCLE_THRESHOLD = "k=3 threshold: l odd, ceil(n/2) <= l <= n, or (n,l)=(7,3)"
    FOUR_CYCLE_THRESHOLD = "k=4 threshold: ceil(3n/8) <= l <= n (floor when n=1 mod 8), or (n,l)=(6,2)"
    K2 = "n(2,l) = floor(4l/3)+1"
    K3 = "n(3,l) = 2l for odd l > 3"
    K4 = "n(4,l) = 8l/3+1 for 3 | l"
    L3 = "n(k,3) = 2k+1"
    K_EVEN = "n(k,l) = 2kl/3+1 for even k, 3 | l, l > 3"
    K_ODD = "n(k,l) = 2kl/3 for odd k, 3 | l, odd l >= 9"
    UPPER = "general upper bound by n1 = floor(2kl/3) mod 4"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class BoundReport:
    k: int
    l: int
    n1: int
    delta: Fraction
    residue: int
    upper: int
    exact: int | None
    provenance: Source | None

    def window(self) -> tuple[int, int]:
        """The conjectured range floor(2kl/3) <= n(k,l) <= floor(2kl/3)+1, clipped by ``upper``."""
        return self.n1, min(self.upper, self.n1 + 1)


def _check_defined(k: int, l: int) -> None:
    if k < 2 or l < 2:
        raise UndefinedParameters(f"need k >= 2 and l >= 2, got k={k}, l={l}")
    if l % 2 == 0 and k % 2 == 1:
        raise UndefinedParameters(f"n({k},{l}) undefined: l even and k odd")


def feasible_k2(n: int, l: int) -> bool:
    """Is every even permutation of n points a product of two l-cycles?"""
    return (3 * n // 4 <= l <= n) or (n == 4 and l == 2)


def feasible_k3(n: int, l: int) -> bool:
    return l % 2 == 1 and ((-(-n // 2) <= l <= n) or (n == 7 and l == 3))


def feasible_k4(n: int, l: int) -> bool:
    if n == 6 and l == 2:
        return True
    low = 3 * n // 8 if n % 8 == 1 else -(-3 * n // 8)
    return low <= l <= n


_THRESHOLDS = {2: feasible_k2, 3: feasible_k3, 4: feasible_k4}


def feasible(n: int, k: int, l: int) -> bool:
    """Threshold predicate for k in {2, 3, 4}."""
    try:
        return _THRESHOLDS[k](n, l)
    except KeyError:
        raise ValueError(f"no closed-form threshold for k={k}") from None


def _max_feasible(k: int, l: int) -> int:
    # Every threshold fails once 3n/8 > l, i.e. beyond n = 3l.
    pred = _THRESHOLDS[k]
    return max(n for n in range(2, 3 * l + 2) if pred(n, l))


def exact_n(k: int, l: int) -> tuple[int, Source] | None:
    """Exact n(k, l) with its source, or None where no closed form is known."""
    _check_defined(k, l)
    if k == 2:
        if l == 2:
            return _max_feasible(2, 2), Source.TWO_CYCLE_THRESHOLD
        return 4 * l // 3 + 1, Source.K2
    if k == 3 and l > 3:
        return 2 * l, Source.K3
    if k == 4 and l % 3 == 0:
        return 8 * l // 3 + 1, Source.K4
    if l == 3:
        return 2 * k + 1, Source.L3
    if l % 3 == 0 and k % 2 == 0:
        return 2 * k * l // 3 + 1, Source.K_EVEN
    if l % 3 == 0 and l >= 9 and k % 2 == 1:
        return 2 * k * l // 3, Source.K_ODD
    if k == 4:
        return _max_feasible(4, l), Source.FOUR_CYCLE_THRESHOLD
    return None


def upper_bound(k: int, l: int) -> BoundReport:
    """General upper bound on n(k, l), with the exact value attached when known."""
    if l <= 2:
        raise UndefinedParameters(f"upper bound needs l > 2, got l={l}")
    _check_defined(k, l)
    n1 = 2 * k * l // 3
    delta = Fraction(2 * k * l, 3) - n1
    residue = n1 % 4
    if residue == 3:
        upper = n1
    elif residue == 2 and l > 3 and delta in (0, Fraction(1, 3)):
        upper = n1
    else:
        upper = n1 + 1
    found = exact_n(k, l)
    exact, source = found if found else (None, None)
    return BoundReport(k, l, n1, delta, residue, upper, exact, source)

"""Involutions of S_n: enumeration, fixed-point/2-cycle statistics, the
bivariate cycle-counting polynomial g_n, and the fixed-point weight sum psi_n.

The counting recursion used throughout is g_{n+1} = u1 g_n + n u2 g_{n-1}:
the last point is either fixed (weight u1) or paired with one of n earlier
points (weight u2).  Specializing u1 = u2 = 1 counts involutions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import factorial

from .exact import PowerSeries, RationalFunction

# Largest n for which psi_n re-derives its value by brute enumeration as an
# internal consistency assertion; above this only the recursion is used.
PSI_ENUMERATION_BOUND = 12


@dataclass(frozen=True)
class Involution:
    """A permutation equal to its own inverse, in one-line notation."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError("images must be a permutation of 1..n")
        for i, img in enumerate(self.images, start=1):
            if self.images[img - 1] != i:
                raise ValueError(f"not an involution: {self.images}")

    @property
    def n(self) -> int:
        return len(self.images)

    def serialize(self) -> str:
        return " ".join(str(v) for v in self.images)

    @classmethod
    def parse(cls, text: str) -> "Involution":
        return cls(tuple(int(v) for v in text.split()))

    def __str__(self):
        return self.serialize()


@dataclass(frozen=True)
class CycleStats:
    """Fixed-point and 2-cycle counts; alpha1 + 2*alpha2 = n."""

    alpha1: int
    alpha2: int


def cycle_stats(inv: Involution) -> CycleStats:
    fixed = sum(1 for i, img in enumerate(inv.images, start=1) if img == i)
    return CycleStats(alpha1=fixed, alpha2=(inv.n - fixed) // 2)


def enumerate_involutions(n: int) -> list[Involution]:
    """All involutions of S_n, built by the matching recursion: the largest
    free point is fixed, or paired with each smaller free point in turn."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out: list[Involution] = []
    images = [0] * (n + 1)  # 1-based

    def build(free: tuple[int, ...]):
        if not free:
            out.append(Involution(tuple(images[1:])))
            return
        e, rest = free[-1], free[:-1]
        images[e] = e
        build(rest)
        for k, f in enumerate(rest):
            images[e], images[f] = f, e
            build(rest[:k] + rest[k + 1 :])
        images[e] = 0

    build(tuple(range(1, n + 1)))
    return out


@cache
def involution_count(n: int) -> int:
    """Involution numbers by the recurrence I(n) = I(n-1) + (n-1) I(n-2)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n <= 1:
        return 1
    return involution_count(n - 1) + (n - 1) * involution_count(n - 2)


def g_poly(n: int, u1: Fraction, u2: Fraction) -> Fraction:
    """Evaluate the cycle-counting polynomial g_n at (u1, u2) by recursion."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    u1, u2 = Fraction(u1), Fraction(u2)
    prev, cur = Fraction(1), u1  # g_0, g_1
    if n == 0:
        return prev
    for m in range(1, n):
        prev, cur = cur, u1 * cur + m * u2 * prev
    return cur


def g_poly_oracle(n: int, u1: Fraction, u2: Fraction) -> Fraction:
    """g_n by direct summation of u1^alpha1 u2^alpha2 over all involutions."""
    u1, u2 = Fraction(u1), Fraction(u2)
    total = Fraction(0)
    for inv in enumerate_involutions(n):
        st = cycle_stats(inv)
        total += u1**st.alpha1 * u2**st.alpha2
    return total


def verify_involution_egf(order: int, u1: Fraction, u2: Fraction) -> bool:
    """Check that exp(u1 t + u2 t^2/2) matches the g_n coefficients.

    Expands the exponential to the given truncation order and compares the
    coefficient of t^n against g_poly(n, u1, u2) / n! for every n <= order.
    """
    u1, u2 = Fraction(u1), Fraction(u2)
    arg = PowerSeries([Fraction(0), u1, u2 * Fraction(1, 2)], order=order)
    expanded = arg.exp()
    return all(
        expanded.coefficient(n) == g_poly(n, u1, u2) / factorial(n)
        for n in range(order + 1)
    )


def _psi_by_enumeration(n: int) -> RationalFunction:
    from .identity import weight_w

    counts: dict[int, int] = {}
    for inv in enumerate_involutions(n):
        a1 = cycle_stats(inv).alpha1
        counts[a1] = counts.get(a1, 0) + 1
    w1 = weight_w(1)
    total = RationalFunction.zero()
    for a1, count in sorted(counts.items()):
        total = total + count * (w1**a1 if a1 else RationalFunction.one())
    return total


@cache
def psi_n(n: int) -> RationalFunction:
    """Sum of w(1)^(number of fixed points) over all involutions of S_n.

    Computed by the recursion psi_{n+1} = w(1) psi_n + n psi_{n-1}; for
    small n the value is re-derived by brute enumeration and the two
    routes are asserted to agree.
    """
    from .identity import weight_w

    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        value = RationalFunction.one()
    elif n == 1:
        value = weight_w(1)
    else:
        value = weight_w(1) * psi_n(n - 1) + (n - 1) * psi_n(n - 2)
    if n <= PSI_ENUMERATION_BOUND:
        enumerated = _psi_by_enumeration(n)
        if enumerated != value:
            raise AssertionError(
                f"psi recursion and enumeration disagree at n={n}: "
                f"{value.format()} vs {enumerated.format()}"
            )
    return value

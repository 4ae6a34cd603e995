"""Exact arithmetic helpers.

Everything certified in this package is rational.  Binary floats appear
only in reporting (log values), always padded, never in decisions.
"""

from __future__ import annotations

import math
from fractions import Fraction


class Infinity:
    """Positive-infinity sentinel, totally ordered against rationals."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "+inf"

    def __eq__(self, other) -> bool:
        return isinstance(other, Infinity)

    def __hash__(self) -> int:
        return hash("mskit.Infinity")

    def __lt__(self, other) -> bool:
        return False

    def __le__(self, other) -> bool:
        return isinstance(other, Infinity)

    def __gt__(self, other) -> bool:
        return not isinstance(other, Infinity)

    def __ge__(self, other) -> bool:
        return True


INF = Infinity()


def is_finite(x) -> bool:
    return not isinstance(x, Infinity)


def frac_ceil(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def frac_floor(x: Fraction) -> int:
    return x.numerator // x.denominator


def geometric_sum(q: Fraction, k0: int) -> Fraction:
    """Sum of q**k over k >= k0.  Requires 0 <= q < 1."""
    if not 0 <= q < 1:
        raise ValueError(f"geometric ratio out of [0,1): {q}")
    return q**k0 / (1 - q)


def power_weighted_sum(q: Fraction, k0: int, moment: int) -> Fraction:
    """Sum of k**moment * q**k over k >= k0, moment in {0,1,2}.

    Closed forms from the full sums minus an explicit head; exact.
    """
    if not 0 <= q < 1:
        raise ValueError(f"geometric ratio out of [0,1): {q}")
    if moment == 0:
        full = Fraction(1) / (1 - q)
    elif moment == 1:
        full = q / (1 - q) ** 2
    elif moment == 2:
        full = q * (1 + q) / (1 - q) ** 3
    else:
        raise ValueError("only moments 0..2 have closed forms here")
    head = sum((Fraction(k) ** moment) * q**k for k in range(k0))
    return full - head


def integer_nth_root(m: int, n: int) -> tuple[int, bool]:
    """(floor(m ** (1/n)), exact?) for m >= 0, n >= 1, by binary search."""
    if m < 0 or n < 1:
        raise ValueError("integer_nth_root needs m >= 0, n >= 1")
    if n == 1 or m in (0, 1):
        return m, True
    lo, hi = 0, 1
    while hi**n <= m:
        hi <<= 1
    while lo + 1 < hi:
        mid = (lo + hi) // 2
        if mid**n <= m:
            lo = mid
        else:
            hi = mid
    return lo, lo**n == m


def rational_nth_root(x: Fraction, n: int) -> Fraction | None:
    """Exact n-th root of x >= 0 when rational, else None."""
    rn, en = integer_nth_root(x.numerator, n)
    rd, ed = integer_nth_root(x.denominator, n)
    if en and ed:
        return Fraction(rn, rd)
    return None


def rational_nth_root_bounds(
    x: Fraction, n: int, tol_exp: int = -40
) -> tuple[Fraction, Fraction]:
    """Enclosure of x ** (1/n) with width <= 2**tol_exp, exact when possible."""
    exact = rational_nth_root(x, n)
    if exact is not None:
        return exact, exact
    lo_i, _ = integer_nth_root(x.numerator * x.denominator ** (n - 1), n)
    lo = Fraction(lo_i, x.denominator)
    hi = Fraction(lo_i + 1, x.denominator)
    width = Fraction(1, 2) ** (-tol_exp)
    while hi - lo > width:
        mid = (lo + hi) / 2
        if mid**n <= x:
            lo = mid
        else:
            hi = mid
    return lo, hi


def log_float(x: Fraction) -> float:
    """float log of a positive rational; safe for huge numerators."""
    if x <= 0:
        raise ValueError("log of nonpositive value")
    return math.log(x.numerator) - math.log(x.denominator)


def log_bounds(x: Fraction) -> tuple[float, float]:
    """Padded float bounds for log x.  Signs are decided exactly, not here."""
    if x == 1:
        return 0.0, 0.0
    v = log_float(x)
    pad = max(abs(v), 1.0) * 2.0**-46
    return v - pad, v + pad


def lcm(a: int, b: int) -> int:
    return a // math.gcd(a, b) * b

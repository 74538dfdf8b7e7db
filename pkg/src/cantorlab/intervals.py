"""Outward-rounded rational intervals and certified elementary enclosures.

All enclosures are conservative: the true real value of every expression
lies inside the returned interval.  Logarithms come from the atanh series
with an explicit rational tail bound, square roots from sign-certified
bisection, so nothing here depends on floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache


class ToleranceError(RuntimeError):
    """Requested enclosure width was not reached within the iteration cap."""


@dataclass(frozen=True)
class RatInterval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        lo, hi = Fraction(self.lo), Fraction(self.hi)
        if lo > hi:
            raise ValueError(f"interval endpoints out of order: {lo} > {hi}")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __contains__(self, x: Fraction) -> bool:
        return self.lo <= x <= self.hi

    def strictly_inside(self, lo: Fraction, hi: Fraction) -> bool:
        return lo < self.lo and self.hi < hi

    def entirely_below(self, other: "RatInterval") -> bool:
        return self.hi < other.lo

    def __add__(self, other: "RatInterval") -> "RatInterval":
        return RatInterval(self.lo + other.lo, self.hi + other.hi)

    def __neg__(self) -> "RatInterval":
        return RatInterval(-self.hi, -self.lo)

    def scale(self, c: Fraction) -> "RatInterval":
        c = Fraction(c)
        if c >= 0:
            return RatInterval(self.lo * c, self.hi * c)
        return RatInterval(self.hi * c, self.lo * c)

    def div_positive(self, other: "RatInterval") -> "RatInterval":
        """Quotient assuming both intervals are strictly positive."""
        if self.lo < 0 or other.lo <= 0:
            raise ValueError("div_positive requires nonnegative numerator and positive denominator")
        return RatInterval(self.lo / other.hi, self.hi / other.lo)

    def __float__(self) -> float:
        return float(self.mid)


def bisect_sign_change(sign_at, lo: Fraction, hi: Fraction, tol: Fraction,
                       max_iter: int = 10**6) -> RatInterval:
    """Shrink [lo, hi] around a root of a function with certified signs.

    ``sign_at(x)`` must return the exact sign (-1, 0, +1) of the function at
    the rational x; the invariant sign(lo) < 0 < sign(hi) is maintained.  A
    zero sign yields a degenerate interval.
    """
    lo, hi, tol = Fraction(lo), Fraction(hi), Fraction(tol)
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    if sign_at(lo) >= 0 or sign_at(hi) <= 0:
        raise ValueError("initial bracket does not straddle a sign change")
    it = 0
    while hi - lo > tol:
        it += 1
        if it > max_iter:
            raise ToleranceError(f"bisection did not reach width {tol} within {max_iter} iterations")
        mid = (lo + hi) / 2
        s = sign_at(mid)
        if s == 0:
            return RatInterval(mid, mid)
        if s < 0:
            lo = mid
        else:
            hi = mid
    return RatInterval(lo, hi)


def sqrt_interval(value: Fraction, tol: Fraction) -> RatInterval:
    """Enclosure of sqrt(value) for rational value >= 0."""
    value = Fraction(value)
    if value < 0:
        raise ValueError("square root of a negative rational")
    if value == 0:
        return RatInterval(Fraction(0), Fraction(0))
    hi0 = max(Fraction(1), value)

    def sign(x: Fraction) -> int:
        d = x * x - value
        return (d > 0) - (d < 0)

    return bisect_sign_change(sign, Fraction(0), hi0 + 1, tol)


@lru_cache(maxsize=None)
def _log2_interval_cached(scale: int) -> RatInterval:
    return _atanh_log(Fraction(2), Fraction(1, 10**scale))


def log_interval(x: Fraction, tol: Fraction) -> RatInterval:
    """Enclosure of the natural log of a positive rational.

    Reduces the argument by powers of two into [3/4, 3/2], then sums
    2*atanh((y-1)/(y+1)) with a rational geometric tail bound.
    """
    x = Fraction(x)
    if x <= 0:
        raise ValueError("log of a nonpositive rational")
    if x == 1:
        return RatInterval(Fraction(0), Fraction(0))
    k = 0
    y = x
    while y >= Fraction(3, 2):
        y /= 2
        k += 1
    while y < Fraction(3, 4):
        y *= 2
        k -= 1
    part = _atanh_log(y, tol / 2) if y != 1 else RatInterval(Fraction(0), Fraction(0))
    if k == 0:
        return part
    # 10^-s precision on log 2 so that |k| * err stays below tol/2
    s = 2
    while Fraction(abs(k), 10**s) * 2 > tol / 2:
        s += 1
    log2 = _log2_interval_cached(s)
    return part + log2.scale(Fraction(k))


def _atanh_log(y: Fraction, tol: Fraction) -> RatInterval:
    """log(y) = 2 * sum z^(2j+1)/(2j+1), z = (y-1)/(y+1), with tail bound."""
    z = (y - 1) / (y + 1)
    z2 = z * z
    term = z
    total = Fraction(0)
    j = 0
    while True:
        total += term / (2 * j + 1)
        term *= z2
        j += 1
        # remaining sum is bounded by |term|/(2j+1) * 1/(1-z^2)
        tail = abs(term) / ((2 * j + 1) * (1 - z2))
        if 2 * tail < tol:
            break
        if j > 10**6:
            raise ToleranceError("atanh series did not converge to requested tolerance")
    # remaining terms all carry the sign of z, so the correction is one-sided
    if z > 0:
        return RatInterval(2 * total, 2 * (total + tail))
    return RatInterval(2 * (total - tail), 2 * total)


def golden_ratio_interval(tol: Fraction) -> RatInterval:
    """Enclosure of (1+sqrt(5))/2 as the positive root of x^2 - x - 1."""

    def sign(x: Fraction) -> int:
        d = x * x - x - 1
        return (d > 0) - (d < 0)

    return bisect_sign_change(sign, Fraction(1), Fraction(2), tol)


def neg_log_interval(x: Fraction, tol: Fraction) -> RatInterval:
    """Enclosure of -log(x) for 0 < x < 1 (a positive quantity)."""
    if not (0 < x < 1):
        raise ValueError("neg_log_interval expects x in (0, 1)")
    return -log_interval(x, tol)


def decimal_str(x: Fraction, places: int, rounding: str = "nearest") -> str:
    """Render a rational as a decimal string with explicit rounding mode."""
    x = Fraction(x)
    sign = "-" if x < 0 else ""
    mag = -x if x < 0 else x
    scaled = mag * 10**places
    floor_val = scaled.numerator // scaled.denominator
    exact = floor_val * scaled.denominator == scaled.numerator
    if rounding == "floor":
        q = floor_val if sign == "" else (floor_val if exact else floor_val + 1)
    elif rounding == "ceil":
        q = (floor_val if exact else floor_val + 1) if sign == "" else floor_val
    elif rounding == "nearest":
        rem2 = 2 * (scaled - floor_val)
        q = floor_val + (1 if rem2 >= 1 else 0)
    else:
        raise ValueError(f"unknown rounding mode {rounding!r}")
    digits = str(q).rjust(places + 1, "0")
    if places == 0:
        return sign + digits
    return f"{sign}{digits[:-places]}.{digits[-places:]}"

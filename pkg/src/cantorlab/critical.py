"""Certified critical bases: the series root beta_c, the quadratic surd
alpha_c, the approximant roots, and the regime classifier.

Every root is produced by sign-certified bisection.  Series with
eventually periodic digits are evaluated in exact closed form; the
aperiodic smallest-admissible series is truncated with a rigorous
geometric tail bound, tightened adaptively until the sign at the query
point is certain (always possible at rational points because the root
itself is irrational).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .admissible import min_admissible, peak_block, periodic_approximant
from .intervals import RatInterval, ToleranceError, bisect_sign_change
from .sequences import Alphabet, EpSequence, Params, beta_series_value

_SERIES_LENGTH_CAP = 1 << 22


def _memoized_sign(fn):
    """Cache exact sign evaluations; refinement revisits bracket endpoints."""
    cache: dict[Fraction, int] = {}

    def wrapped(b: Fraction) -> int:
        s = cache.get(b)
        if s is None:
            s = fn(b)
            cache[b] = s
        return s

    return wrapped


def _poly_int(digits, p: int, q: int) -> int:
    """sum digits[i] p^i q^(len-i) by integer Horner (no rational reduction)."""
    u = 0
    qq = q
    for d in reversed(digits):
        u = u * p + d * qq
        qq *= q
    return u


def _admissible_partial(n_parts: int, b: Fraction, length: int) -> Fraction:
    digits = min_admissible(2 * n_parts - 1, length)
    p, q = b.numerator, b.denominator
    return Fraction(p * _poly_int(digits, p, q), q ** (length + 1))


def admissible_series_bounds(n_parts: int, b: Fraction, length: int) -> RatInterval:
    """Enclosure of sum lambda_l b^l from a length-``length`` truncation."""
    partial = _admissible_partial(n_parts, b, length)
    tail = (2 * n_parts - 2) * b ** (length + 1) / (1 - b)
    return RatInterval(partial, partial + tail)


def _admissible_series_sign(n_parts: int, b: Fraction) -> int:
    """Certified sign of sum lambda_l b^l - 1 at a rational b in (0, 1).

    Integer arithmetic throughout: with b = p/q the truncated sum is
    p * poly / q^(L+1) and the tail is below (2N-2) p^(L+1) / (q^L (q-p)),
    so both sign tests clear denominators exactly.
    """
    p, q = b.numerator, b.denominator
    length = 16
    while True:
        digits = min_admissible(2 * n_parts - 1, length)
        lhs = p * _poly_int(digits, p, q)  # = S_L * q^(L+1)
        rhs = q ** (length + 1)
        if lhs > rhs:
            return 1
        if lhs * (q - p) + (2 * n_parts - 2) * p ** (length + 1) * q < rhs * (q - p):
            return -1
        length *= 2
        if length > _SERIES_LENGTH_CAP:
            raise ToleranceError("sign of the admissible series stayed ambiguous; is b the root itself?")


@dataclass
class RootEnclosure:
    """A certified isolating interval for a base defined by a digit sequence."""

    interval: RatInterval
    descriptor: str
    in_domain: bool
    residual_bound: Fraction
    _sign: object = field(repr=False, compare=False, default=None)

    def refine(self, tol: Fraction) -> "RootEnclosure":
        if self._sign is None or self.interval.width == 0:
            return self
        interval = bisect_sign_change(self._sign, self.interval.lo, self.interval.hi, tol)
        return RootEnclosure(interval, self.descriptor, self.in_domain, self.residual_bound, self._sign)


def beta_c(n_parts: int, tol: Fraction = Fraction(1, 10**7)) -> RootEnclosure:
    """Root of 1 = sum lambda_l beta^l over {0..2N-2} (certified bisection)."""
    if n_parts < 2:
        raise ValueError("N must be >= 2")
    lo = Fraction(1, 2 * n_parts - 1)
    hi = Fraction(1, n_parts)

    sign = _memoized_sign(lambda b: _admissible_series_sign(n_parts, b))
    interval = bisect_sign_change(sign, lo, hi, Fraction(tol))
    mid_bounds = admissible_series_bounds(n_parts, interval.mid, 64)
    residual = max(abs(mid_bounds.lo - 1), abs(mid_bounds.hi - 1))
    return RootEnclosure(interval, "smallest-admissible series", True, residual, sign)


@dataclass(frozen=True)
class QuadraticSurd:
    """alpha_c(N) = [N+1 - sqrt((N-1)(N+3))]/2, the small root of x^2-(N+1)x+1."""

    n_parts: int

    @property
    def discriminant(self) -> int:
        return (self.n_parts - 1) * (self.n_parts + 3)

    def poly_at(self, x: Fraction) -> Fraction:
        return x * x - (self.n_parts + 1) * x + 1

    def side_of(self, x: Fraction) -> int:
        """-1 if x < alpha_c, 0 if equal, +1 if x > alpha_c (x in (0, 1))."""
        if not (0 < x < 1):
            raise ValueError("side test expects x in (0, 1)")
        p = self.poly_at(Fraction(x))
        if p > 0:
            return -1
        if p < 0:
            return 1
        return 0

    def enclosure(self, tol: Fraction = Fraction(1, 10**7)) -> RatInterval:
        def sign(x: Fraction) -> int:
            p = self.poly_at(x)
            return (p < 0) - (p > 0)  # negated: poly decreases through the root

        return bisect_sign_change(sign, Fraction(0), Fraction(1), Fraction(tol))


def alpha_c(n_parts: int, tol: Fraction = Fraction(1, 10**7)) -> tuple[QuadraticSurd, RatInterval]:
    if n_parts < 2:
        raise ValueError("N must be >= 2")
    surd = QuadraticSurd(n_parts)
    return surd, surd.enclosure(tol)


def periodic_series_sign(seq: EpSequence, b: Fraction) -> int:
    """Exact sign of (sum seq_l b^l) - 1, clearing denominators to integers."""
    p, q = b.numerator, b.denominator
    pre_part = _poly_int(seq.pre, p, q)  # A = pre_part / q^P
    per_part = _poly_int(seq.per, p, q)  # B = per_part / q^Q
    core = q ** len(seq.per) - p ** len(seq.per)
    whole = pre_part * core + p ** len(seq.pre) * per_part
    d = p * whole - q ** (len(seq.pre) + 1) * core
    return (d > 0) - (d < 0)


def _periodic_series_root(seq: EpSequence, n_parts: int, descriptor: str,
                          tol: Fraction) -> RootEnclosure:
    """Root of 1 = sum seq_l beta^l, the series in exact closed form."""

    sign = _memoized_sign(lambda b: periodic_series_sign(seq, b))

    lo = Fraction(1, 100 * n_parts)
    hi = Fraction(1, n_parts)
    if sign(hi) == 0:
        interval = RatInterval(hi, hi)
    else:
        interval = bisect_sign_change(sign, lo, hi, Fraction(tol))
    domain_lo = Fraction(1, 2 * n_parts - 1)
    domain_hi = Fraction(1, n_parts)
    in_domain = domain_lo < interval.lo and interval.hi < domain_hi
    if interval.width == 0:
        in_domain = domain_lo < interval.lo < domain_hi
    residual = abs(beta_series_value(seq, interval.mid) - 1)
    return RootEnclosure(interval, descriptor, in_domain, residual, sign)


def beta_n(n_parts: int, n: int, tol: Fraction = Fraction(1, 10**7)) -> RootEnclosure:
    """Base whose expansion of 1 is the n-th periodic approximant (n odd >= 3)."""
    if n < 3 or n % 2 == 0:
        raise ValueError("approximant index must be odd and >= 3")
    seq = periodic_approximant(n_parts, n)
    return _periodic_series_root(seq, n_parts, f"periodic approximant n={n}", tol)


def alpha_n(n_parts: int, n: int, tol: Fraction = Fraction(1, 10**7)) -> RootEnclosure:
    """Base whose expansion of 1 is (N (N-1)^(n-1))^inf (n >= 1)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    seq = EpSequence((), peak_block(n_parts, n), Alphabet.unsigned(2 * n_parts - 1))
    return _periodic_series_root(seq, n_parts, f"peak-run period n={n}", tol)


def separate(a: RootEnclosure, b: RootEnclosure, max_rounds: int = 200) -> int:
    """Refine two enclosures until disjoint; -1 if a's root is smaller, +1 else."""
    for _ in range(max_rounds):
        if a.interval.hi < b.interval.lo:
            return -1
        if b.interval.hi < a.interval.lo:
            return 1
        a = a.refine(a.interval.width / 16) if a.interval.width > 0 else a
        b = b.refine(b.interval.width / 16) if b.interval.width > 0 else b
        if a.interval.width == 0 and b.interval.width == 0:
            if a.interval.lo == b.interval.lo:
                raise ValueError("enclosures collapse to the same rational root")
            return -1 if a.interval.lo < b.interval.lo else 1
    raise ToleranceError("enclosures could not be separated within the round cap")


def side_of_enclosure(x: Fraction, enc: RootEnclosure, max_rounds: int = 200) -> int:
    """-1 if rational x lies below the enclosed root, +1 if above."""
    x = Fraction(x)
    for _ in range(max_rounds):
        if x < enc.interval.lo:
            return -1
        if x > enc.interval.hi:
            return 1
        enc = enc.refine(enc.interval.width / 64)
    raise ToleranceError("rational point could not be separated from the root enclosure")


POSITIVE_DIMENSION = "positive-dimension"
CRITICAL = "critical"
COUNTABLE = "countable"


@dataclass(frozen=True)
class Regime:
    set_kind: str  # "U" | "S"
    verdict: str


def classify(params: Params) -> tuple[Regime, Regime]:
    """Regimes of the unique-code set and its self-similar subset at (N, beta).

    beta is rational while both critical bases are irrational, so the
    comparisons always resolve: the quadratic by an exact sign, the series
    root by shrinking its enclosure until beta falls outside.
    """
    u_side = side_of_enclosure(params.beta, beta_c(params.N, Fraction(1, 10**6)))
    u = Regime("U", POSITIVE_DIMENSION if u_side < 0 else COUNTABLE)
    surd = QuadraticSurd(params.N)
    s_side = surd.side_of(params.beta)
    s = Regime("S", POSITIVE_DIMENSION if s_side < 0 else COUNTABLE)
    return u, s

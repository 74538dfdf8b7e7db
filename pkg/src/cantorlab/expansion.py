"""Quasi-greedy expansions in a rational base and their order conditions.

The expansion of 1 in base beta with digits {0..m-1} is exposed as a
memoized stream: digits are generally aperiodic, so comparisons against it
walk digit by digit up to a cap.  A tie that persists is resolved by the
remainder-state recurrence: the stream's state after j digits determines
everything that follows, so a repeated state at period-aligned positions
proves the comparison is an exact equality.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction

from .sequences import EpSequence, beta_series_value

DEFAULT_DEPTH_CAP = 4096


@dataclass(frozen=True)
class Verdict:
    """Three-valued outcome of a semi-decidable lexicographic test."""

    kind: str  # "yes" | "no" | "undetermined"
    depth: int | None = None

    @classmethod
    def yes(cls) -> "Verdict":
        return cls("yes")

    @classmethod
    def no(cls) -> "Verdict":
        return cls("no")

    @classmethod
    def undetermined(cls, depth: int) -> "Verdict":
        return cls("undetermined", depth)

    @property
    def is_yes(self) -> bool:
        return self.kind == "yes"

    @property
    def is_no(self) -> bool:
        return self.kind == "no"

    @property
    def is_undetermined(self) -> bool:
        return self.kind == "undetermined"


def x_max(beta: Fraction, m: int) -> Fraction:
    return (m - 1) * beta / (1 - beta)


def _largest_digit_below(bound: Fraction, m: int) -> int:
    """Largest s in {0..m-1} with s < bound (bound > 0)."""
    n, d = bound.numerator, bound.denominator
    q, r = divmod(n, d)
    s = q - 1 if r == 0 else q
    return min(m - 1, s)


def quasi_greedy(x: Fraction, beta: Fraction, m: int, length: int) -> tuple[int, ...]:
    """First ``length`` digits of the quasi-greedy expansion of x.

    Each digit s_n is the largest element of {0..m-1} keeping the partial
    sum strictly below x, so every remainder stays strictly positive and
    the expansion is infinite.
    """
    x, beta = Fraction(x), Fraction(beta)
    if not (Fraction(1, m) < beta < 1):
        raise ValueError("base must lie in (1/m, 1)")
    if not (0 < x <= x_max(beta, m)):
        raise ValueError(f"target {x} outside (0, {x_max(beta, m)}]")
    digits = []
    u = x  # scaled remainder: u_n = (x - sum_{l<=n} s_l beta^l) / beta^n
    for _ in range(length):
        s = _largest_digit_below(u / beta, m)
        digits.append(s)
        u = u / beta - s
    return tuple(digits)


class DeltaStream:
    """Memoized quasi-greedy expansion of 1: digits plus remainder states.

    ``digit(i)`` is the (i+1)-th expansion digit; ``state(j)`` is the scaled
    remainder after j digits (state(0) == 1).  Thread-safe for concurrent
    prefix extension.
    """

    def __init__(self, beta: Fraction, m: int):
        beta = Fraction(beta)
        if not (Fraction(1, m) < beta < 1):
            raise ValueError("base must lie in (1/m, 1)")
        self.beta = beta
        self.m = m
        self._digits: list[int] = []
        self._states: list[Fraction] = [Fraction(1)]
        self._lock = threading.Lock()

    def _extend_to(self, length: int) -> None:
        with self._lock:
            while len(self._digits) < length:
                u = self._states[-1]
                s = _largest_digit_below(u / self.beta, self.m)
                self._digits.append(s)
                self._states.append(u / self.beta - s)

    def digit(self, i: int) -> int:
        if i >= len(self._digits):
            self._extend_to(i + 1)
        return self._digits[i]

    def state(self, j: int) -> Fraction:
        if j > len(self._digits):
            self._extend_to(j)
        return self._states[j]

    def prefix(self, length: int) -> tuple[int, ...]:
        self._extend_to(length)
        return tuple(self._digits[:length])


_delta_cache: dict[tuple[Fraction, int], DeltaStream] = {}
_delta_cache_lock = threading.Lock()


def delta_stream(beta: Fraction, m: int) -> DeltaStream:
    """The expansion-of-1 stream for (beta, m), memoized per pair."""
    key = (Fraction(beta), m)
    with _delta_cache_lock:
        stream = _delta_cache.get(key)
        if stream is None:
            stream = DeltaStream(*key)
            _delta_cache[key] = stream
    return stream


def delta_of_beta(beta: Fraction, m: int, length: int) -> tuple[int, ...]:
    """First ``length`` digits of the quasi-greedy expansion of 1."""
    return delta_stream(beta, m).prefix(length)


def shift_dominance(gamma: EpSequence) -> bool:
    """True iff every left shift of gamma is lexicographically <= gamma."""
    from .sequences import GREATER, lex_cmp

    return all(
        lex_cmp(gamma.shift(k), gamma) != GREATER
        for k in range(1, gamma.distinct_shift_count() + 1)
    )


def is_quasi_greedy_valid(gamma: EpSequence, beta: Fraction, m: int) -> Verdict:
    """Decide whether gamma is the quasi-greedy expansion of 1 in base beta.

    Requires gamma to be an infinite expansion of 1 (exact rational check);
    anything else is an error, distinct from a No verdict.
    """
    if gamma.alphabet.lo != 0 or gamma.alphabet.hi != m - 1:
        raise ValueError("gamma must be declared over {0..m-1}")
    if gamma.is_zero() or not any(gamma.per):
        raise ValueError("gamma has finitely many nonzero digits: not an infinite expansion")
    if beta_series_value(gamma, beta) != 1:
        raise ValueError("gamma is not a beta-expansion of 1")
    return Verdict.yes() if shift_dominance(gamma) else Verdict.no()


# Comparison outcomes for one shifted tail against the delta stream.
_RESOLVED_LESS = "less"
_RESOLVED_NOT_LESS = "not-less"
_RESOLVED_EQUAL = "equal"
_CAPPED = "capped"


def _compare_tail(tail: EpSequence, reflected: bool, delta, depth_cap: int) -> tuple[str, int]:
    """Walk the strict comparison ``tail (< reflected) delta`` digit by digit."""
    m_top = tail.alphabet.hi
    period = tail.period_len
    period_start = tail.transient_len
    have_states = getattr(delta, "state", None) is not None and delta.state(0) is not None
    for i in range(depth_cap):
        a = tail.digit(i)
        if reflected:
            a = m_top - a
        d = delta.digit(i)
        if a < d:
            return _RESOLVED_LESS, i
        if a > d:
            return _RESOLVED_NOT_LESS, i
        if have_states:
            j = i + 1
            if j - period >= period_start and delta.state(j) == delta.state(j - period):
                # delta is periodic with the tail's period from here on and
                # all compared digits tied: the sequences are equal.
                return _RESOLVED_EQUAL, i
    return _CAPPED, depth_cap


def unique_expansion_test(eps: EpSequence, delta, depth_cap: int = DEFAULT_DEPTH_CAP) -> Verdict:
    """Order-theoretic membership test for the unique-expansion set.

    For every shift position k: if eps_k < m-1 the shifted tail must be
    strictly below delta, and if eps_k > 0 the reflected shifted tail must
    be strictly below delta.  ``delta`` is any digit source with ``digit``
    (and optionally ``state``), e.g. a :class:`DeltaStream` or the smallest
    admissible word at the critical base.
    """
    m_top = eps.alphabet.hi
    if eps.alphabet.lo != 0:
        raise ValueError("eps must be declared over {0..m-1}")
    capped_depth = None
    for k in range(1, eps.distinct_shift_count() + 1):
        digit_k = eps.digit(k - 1)
        tail = eps.shift(k)
        checks = []
        if digit_k < m_top:
            checks.append(False)  # plain tail
        if digit_k > 0:
            checks.append(True)  # reflected tail
        for reflected in checks:
            outcome, depth = _compare_tail(tail, reflected, delta, depth_cap)
            if outcome in (_RESOLVED_NOT_LESS, _RESOLVED_EQUAL):
                return Verdict.no()
            if outcome == _CAPPED:
                capped_depth = depth
    if capped_depth is not None:
        return Verdict.undetermined(capped_depth)
    return Verdict.yes()


def unique_expansion_test_rational(eps: EpSequence, beta: Fraction, m: int,
                                   depth_cap: int = DEFAULT_DEPTH_CAP) -> Verdict:
    """:func:`unique_expansion_test` against the expansion of 1 in base beta."""
    if eps.alphabet.hi != m - 1:
        raise ValueError("eps alphabet does not match m")
    return unique_expansion_test(eps, delta_stream(beta, m), depth_cap)

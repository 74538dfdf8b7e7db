"""Digit alphabets, eventually periodic sequences, and exact series evaluation.

Everything here is pure and exact: digits are small ints, scalars are
`fractions.Fraction`, and infinite sequences are stored as a finite
preperiod plus a repeating period.  Equality of represented sequences is
decidable because construction always canonicalizes: the period is reduced
to its primitive root and any preperiod suffix that merely restates the
period is absorbed into it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

LESS, EQUAL, GREATER = -1, 0, 1


class AlphabetMismatch(ValueError):
    """Raised when an operation mixes sequences over different alphabets."""


@dataclass(frozen=True)
class Alphabet:
    """Contiguous integer digit range [lo, hi]."""

    lo: int
    hi: int

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError(f"empty alphabet [{self.lo}, {self.hi}]")

    @classmethod
    def unsigned(cls, m: int) -> "Alphabet":
        """Digits {0, 1, ..., m-1}."""
        if m < 2:
            raise ValueError("alphabet needs at least two digits")
        return cls(0, m - 1)

    @classmethod
    def signed(cls, n: int) -> "Alphabet":
        """Digits {-(n-1), ..., -1, 0, 1, ..., n-1}."""
        if n < 2:
            raise ValueError("signed alphabet needs n >= 2")
        return cls(1 - n, n - 1)

    def __contains__(self, digit: int) -> bool:
        return self.lo <= digit <= self.hi

    @property
    def size(self) -> int:
        return self.hi - self.lo + 1

    def reflect_digit(self, digit: int) -> int:
        """The involution d -> lo + hi - d (digit reflection / negation)."""
        return self.lo + self.hi - digit


def _primitive_period(per: tuple[int, ...]) -> tuple[int, ...]:
    n = len(per)
    for d in range(1, n + 1):
        if n % d == 0 and per[:d] * (n // d) == per:
            return per[:d]
    return per


@dataclass(frozen=True)
class EpSequence:
    """An eventually periodic infinite digit sequence ``pre (per)^inf``.

    Instances are canonical: the period is primitive and the preperiod is
    as short as possible, so two instances represent the same infinite
    sequence iff they are equal as dataclasses.
    """

    pre: tuple[int, ...]
    per: tuple[int, ...]
    alphabet: Alphabet

    def __post_init__(self) -> None:
        pre = tuple(self.pre)
        per = tuple(self.per)
        if not per:
            raise ValueError("period must be nonempty")
        for d in pre + per:
            if d not in self.alphabet:
                raise ValueError(f"digit {d} outside alphabet [{self.alphabet.lo}, {self.alphabet.hi}]")
        per = _primitive_period(per)
        # Absorb a preperiod suffix into the period by rotating the period
        # underneath it; shortest preperiod makes equality structural.
        while pre and pre[-1] == per[-1]:
            per = per[-1:] + per[:-1]
            pre = pre[:-1]
        object.__setattr__(self, "pre", pre)
        object.__setattr__(self, "per", per)

    def digit(self, i: int) -> int:
        """Digit at 0-based position i."""
        if i < len(self.pre):
            return self.pre[i]
        return self.per[(i - len(self.pre)) % len(self.per)]

    def prefix(self, length: int) -> tuple[int, ...]:
        return tuple(self.digit(i) for i in range(length))

    def shift(self, k: int) -> "EpSequence":
        """Drop the first k digits."""
        if k < 0:
            raise ValueError("shift distance must be >= 0")
        if k <= len(self.pre):
            return EpSequence(self.pre[k:], self.per, self.alphabet)
        r = (k - len(self.pre)) % len(self.per)
        return EpSequence((), self.per[r:] + self.per[:r], self.alphabet)

    def reflect(self) -> "EpSequence":
        f = self.alphabet.reflect_digit
        return EpSequence(tuple(f(d) for d in self.pre), tuple(f(d) for d in self.per), self.alphabet)

    def map_digits(self, f, alphabet: Alphabet) -> "EpSequence":
        return EpSequence(tuple(f(d) for d in self.pre), tuple(f(d) for d in self.per), alphabet)

    @property
    def transient_len(self) -> int:
        return len(self.pre)

    @property
    def period_len(self) -> int:
        return len(self.per)

    def distinct_shift_count(self) -> int:
        """Number of distinct sequences among all left shifts."""
        return len(self.pre) + len(self.per)

    def is_zero(self) -> bool:
        return not any(self.pre) and not any(self.per)


def lex_cmp(a: EpSequence, b: EpSequence) -> int:
    """Exact lexicographic comparison; returns LESS, EQUAL, or GREATER.

    Two eventually periodic sequences agreeing on a prefix of length
    |pre_a| + |pre_b| + lcm(|per_a|, |per_b|) agree everywhere.
    """
    if a.alphabet != b.alphabet:
        raise AlphabetMismatch(f"cannot compare digits over {a.alphabet} and {b.alphabet}")
    bound = len(a.pre) + len(b.pre) + lcm(len(a.per), len(b.per))
    for i in range(bound):
        x, y = a.digit(i), b.digit(i)
        if x != y:
            return LESS if x < y else GREATER
    return EQUAL


def word_cmp(a: tuple[int, ...], b: tuple[int, ...]) -> int:
    """Lexicographic comparison of finite words of equal length."""
    if len(a) != len(b):
        raise ValueError("word comparison requires equal lengths")
    if a == b:
        return EQUAL
    return LESS if a < b else GREATER


@dataclass(frozen=True)
class Params:
    """Pair (N, beta) with beta an exact rational in (1/(2N-1), 1/N)."""

    N: int
    beta: Fraction

    def __post_init__(self) -> None:
        if not isinstance(self.N, int) or self.N < 2:
            raise ValueError("N must be an integer >= 2")
        beta = Fraction(self.beta)
        object.__setattr__(self, "beta", beta)
        if not (Fraction(1, 2 * self.N - 1) < beta < Fraction(1, self.N)):
            raise ValueError(f"beta={beta} outside (1/{2 * self.N - 1}, 1/{self.N})")

    @property
    def m(self) -> int:
        """Size of the shifted digit set {0, ..., 2N-2}."""
        return 2 * self.N - 1

    @property
    def scale(self) -> Fraction:
        """The per-digit weight (1-beta)/(N-1)."""
        return (1 - self.beta) / (self.N - 1)

    @property
    def signed_alphabet(self) -> Alphabet:
        return Alphabet.signed(self.N)

    @property
    def unsigned_alphabet(self) -> Alphabet:
        return Alphabet.unsigned(self.m)


def power_series_value(s: EpSequence, beta: Fraction) -> Fraction:
    """Exact value of sum_{i>=0} digit(i) * beta^i (geometric closed form)."""
    beta = Fraction(beta)
    if not (0 < beta < 1):
        raise ValueError("base must lie in (0, 1)")
    acc = Fraction(0)
    for d in reversed(s.pre):
        acc = acc * beta + d
    per_acc = Fraction(0)
    for d in reversed(s.per):
        per_acc = per_acc * beta + d
    q = len(s.per)
    return acc + beta ** len(s.pre) * per_acc / (1 - beta**q)


def pi_value(code: EpSequence, n_parts: int, beta: Fraction) -> Fraction:
    """Exact value of sum_{l>=1} j_l beta^(l-1) (1-beta)/(N-1)."""
    return power_series_value(code, beta) * (1 - beta) / (n_parts - 1)


def beta_series_value(s: EpSequence, beta: Fraction) -> Fraction:
    """Exact value of sum_{l>=1} s_l beta^l."""
    return beta * power_series_value(s, beta)


def tail_series_value(s: EpSequence, k: int, beta: Fraction) -> Fraction:
    """Exact value of sum_{l>=1} s_{k+l} beta^l."""
    return beta * power_series_value(s.shift(k), beta)


def to_expansion_alphabet(code: EpSequence, n_parts: int) -> EpSequence:
    """Shift a signed code into {0, ..., 2N-2} by adding N-1 to every digit."""
    return code.map_digits(lambda d: d + n_parts - 1, Alphabet.unsigned(2 * n_parts - 1))


def to_signed_alphabet(seq: EpSequence, n_parts: int) -> EpSequence:
    """Inverse of :func:`to_expansion_alphabet`."""
    return seq.map_digits(lambda d: d - (n_parts - 1), Alphabet.signed(n_parts))


def parse_code(text: str, alphabet: Alphabet) -> EpSequence:
    """Parse the ``"pre|per"`` literal format, e.g. ``"-1,0|2,-2"``.

    Each side is a comma-separated digit list; an empty preperiod is
    written ``"|2,-2"``.
    """
    if "|" not in text:
        raise ValueError(f"code literal {text!r} lacks the 'pre|per' separator at position {len(text)}")
    pre_text, _, per_text = text.partition("|")

    def digits(part: str, offset: int) -> tuple[int, ...]:
        part = part.strip()
        if not part:
            return ()
        out = []
        pos = offset
        for chunk in part.split(","):
            try:
                out.append(int(chunk.strip()))
            except ValueError:
                raise ValueError(f"bad digit {chunk.strip()!r} in code literal at position {pos}") from None
            pos += len(chunk) + 1
        return tuple(out)

    pre = digits(pre_text, 0)
    per = digits(per_text, len(pre_text) + 1)
    if not per:
        raise ValueError("code literal needs a nonempty period after '|'")
    return EpSequence(pre, per, alphabet)


def format_code(s: EpSequence) -> str:
    return ",".join(str(d) for d in s.pre) + "|" + ",".join(str(d) for d in s.per)

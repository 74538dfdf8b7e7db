"""Shared corpus builders and brute-force oracles for the test suite."""

from __future__ import annotations

import random
from fractions import Fraction

from cantorlab.sequences import Alphabet, EpSequence, Params


def partial_pi_sum(code: EpSequence, n_parts: int, beta: Fraction, terms: int) -> Fraction:
    """Independent oracle: plain term-by-term partial sum of the projection series."""
    c = (1 - beta) / (n_parts - 1)
    return sum(code.digit(i) * beta**i * c for i in range(terms))


def partial_beta_series(seq: EpSequence, beta: Fraction, terms: int) -> Fraction:
    return sum(seq.digit(i) * beta ** (i + 1) for i in range(terms))


def naive_lex_cmp(a: EpSequence, b: EpSequence, depth: int) -> int:
    for i in range(depth):
        x, y = a.digit(i), b.digit(i)
        if x != y:
            return -1 if x < y else 1
    return 0


def random_params(rng: random.Random, n_parts: int) -> Params:
    """Uniformish rational beta strictly inside (1/(2N-1), 1/N)."""
    while True:
        den = rng.randrange(50, 400)
        lo = den // (2 * n_parts - 1) + 1
        hi = (den + n_parts - 1) // n_parts - 1
        if lo > hi:
            continue
        num = rng.randrange(lo, hi + 1)
        beta = Fraction(num, den)
        if Fraction(1, 2 * n_parts - 1) < beta < Fraction(1, n_parts):
            return Params(n_parts, beta)


def random_signed_code(rng: random.Random, n_parts: int,
                       max_pre: int = 4, max_per: int = 6) -> EpSequence:
    alph = Alphabet.signed(n_parts)
    pre_len = rng.randrange(0, max_pre + 1)
    per_len = rng.randrange(1, max_per + 1)
    pre = tuple(rng.randrange(alph.lo, alph.hi + 1) for _ in range(pre_len))
    per = tuple(rng.randrange(alph.lo, alph.hi + 1) for _ in range(per_len))
    return EpSequence(pre, per, alph)


def brute_force_strong_periodicity(s: EpSequence, q_max: int) -> bool:
    """Directly search decompositions head (block)^inf with head <= block digitwise."""
    for q in range(1, q_max + 1):
        head = s.prefix(q)
        block = s.prefix(2 * q)[q:]
        if any(a > b for a, b in zip(head, block)):
            continue
        if EpSequence(head, block, s.alphabet) == s:
            return True
    return False

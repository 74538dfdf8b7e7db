"""The Thue-Morse sequence, the smallest admissible word, and block families.

The smallest admissible sequence over {0, ..., m-1} is generated from the
Thue-Morse parity closed form; the doubling recursion is kept only as a
cross-check and asserts agreement digit for digit.
"""

from __future__ import annotations

from functools import lru_cache

from .sequences import Alphabet, EpSequence

MAX_BLOCK_EXPONENT = 16


def thue_morse(i: int) -> int:
    """Parity of the binary digit sum of i (tau_0 = 0)."""
    if i < 0:
        raise ValueError("index must be >= 0")
    return i.bit_count() & 1


def min_admissible(m: int, length: int) -> tuple[int, ...]:
    """First ``length`` digits of the smallest admissible sequence over {0..m-1}."""
    if m < 2:
        raise ValueError("alphabet size must be >= 2")
    q, odd = divmod(m, 2)
    if odd:
        return tuple(q + thue_morse(i) - thue_morse(i - 1) for i in range(1, length + 1))
    return tuple(q - 1 + thue_morse(i) for i in range(1, length + 1))


def min_admissible_doubling(n_parts: int, length: int) -> tuple[int, ...]:
    """Same word over {0..2N-2}, built by the doubling recursion.

    lambda_1 = N, lambda_{2^{n+1}} = 2N-1-lambda_{2^n}, and
    lambda_{2^n + l} = 2N-2-lambda_l for 1 <= l < 2^n.
    """
    if n_parts < 2:
        raise ValueError("N must be >= 2")
    if length < 1:
        return ()
    size = 1
    while size < length:
        size *= 2
    lam = [0] * (size + 1)
    lam[1] = n_parts
    filled = 1
    while filled < size:
        for offset in range(1, filled):
            lam[filled + offset] = 2 * n_parts - 2 - lam[offset]
        lam[2 * filled] = 2 * n_parts - 1 - lam[filled]
        filled *= 2
    word = tuple(lam[1 : length + 1])
    assert word == min_admissible(2 * n_parts - 1, length), "doubling recursion disagrees with closed form"
    return word


def _check_exponent(n: int) -> None:
    if not 0 <= n <= MAX_BLOCK_EXPONENT:
        raise ValueError(f"block exponent must lie in [0, {MAX_BLOCK_EXPONENT}]")


@lru_cache(maxsize=None)
def doubling_word(n_parts: int, n: int) -> tuple[int, ...]:
    """The first 2^n digits of the smallest admissible word (block w)."""
    _check_exponent(n)
    return min_admissible(2 * n_parts - 1, 2**n)


@lru_cache(maxsize=None)
def periodic_approximant(n_parts: int, n: int) -> EpSequence:
    """Eventually periodic approximant: first 2^n digits, then the next 2^n repeated."""
    _check_exponent(n + 1)
    word = min_admissible(2 * n_parts - 1, 2 ** (n + 1))
    half = 2**n
    return EpSequence(word[:half], word[half:], Alphabet.unsigned(2 * n_parts - 1))


@lru_cache(maxsize=None)
def tile_blocks(n_parts: int, n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The pair of blocks (N-1)w and (N-2)w, w the length 2^n - 1 admissible prefix."""
    _check_exponent(n)
    prefix = min_admissible(2 * n_parts - 1, 2**n - 1)
    return (n_parts - 1,) + prefix, (n_parts - 2,) + prefix


def peak_block(n_parts: int, n: int) -> tuple[int, ...]:
    """The block N (N-1)^(n-1)."""
    if n < 1:
        raise ValueError("block length must be >= 1")
    return (n_parts,) + (n_parts - 1,) * (n - 1)


def reflect_word(word: tuple[int, ...], m: int) -> tuple[int, ...]:
    """Digitwise reflection d -> m-1-d of a word over {0..m-1}."""
    return tuple(m - 1 - d for d in word)


class MinAdmissibleDigits:
    """Digit source view of the smallest admissible sequence (0-based index)."""

    def __init__(self, m: int):
        self.m = m
        q, odd = divmod(m, 2)
        self._q = q
        self._odd = bool(odd)

    def digit(self, i: int) -> int:
        ell = i + 1
        if self._odd:
            return self._q + thue_morse(ell) - thue_morse(ell - 1)
        return self._q - 1 + thue_morse(ell)

    def state(self, j: int):  # aperiodic: no remainder state to recur on
        return None

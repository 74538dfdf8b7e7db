import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cantorlab.sequences import (
    EQUAL,
    GREATER,
    LESS,
    Alphabet,
    AlphabetMismatch,
    EpSequence,
    Params,
    beta_series_value,
    format_code,
    lex_cmp,
    parse_code,
    pi_value,
    tail_series_value,
    to_expansion_alphabet,
    to_signed_alphabet,
)

from helpers import naive_lex_cmp, partial_beta_series, partial_pi_sum

OM3 = Alphabet.unsigned(3)


def seq(pre, per, alph=OM3):
    return EpSequence(tuple(pre), tuple(per), alph)


def ep_sequences(alphabet=OM3, max_pre=4, max_per=5):
    digit = st.integers(alphabet.lo, alphabet.hi)
    return st.builds(
        lambda pre, per: EpSequence(tuple(pre), tuple(per), alphabet),
        st.lists(digit, max_size=max_pre),
        st.lists(digit, min_size=1, max_size=max_per),
    )


class TestCanonicalForm:
    def test_rotated_representations_are_equal(self):
        assert seq([1], [0, 1]) == seq([], [1, 0])

    def test_primitive_period(self):
        assert seq([], [1, 0, 1, 0]) == seq([], [1, 0])

    def test_absorption(self):
        assert seq([2, 1], [1]) == seq([2], [1])

    @given(ep_sequences(), st.integers(0, 12))
    def test_canonical_preserves_digits(self, s, i):
        tail = s.shift(3)
        rebuilt = EpSequence(s.prefix(3) + tail.pre, tail.per, s.alphabet)
        assert rebuilt == s
        assert rebuilt.digit(i) == s.digit(i)

    def test_alphabet_guard(self):
        with pytest.raises(ValueError):
            seq([], [3])
        with pytest.raises(ValueError):
            seq([-1], [0])


class TestLexCompare:
    def test_identical(self):
        assert lex_cmp(seq([], [1]), seq([], [1])) == EQUAL

    def test_differs_at_index_two(self):
        assert lex_cmp(seq([2], [1]), seq([], [2])) == LESS

    def test_rotation_equal(self):
        a = seq([], [1, 0])
        b = seq([1], [0, 1])
        assert lex_cmp(a, b) == EQUAL

    def test_mismatch_raises(self):
        with pytest.raises(AlphabetMismatch):
            lex_cmp(seq([], [1]), EpSequence((), (1,), Alphabet.unsigned(5)))

    @given(ep_sequences(), ep_sequences())
    def test_matches_deep_naive_comparison(self, a, b):
        depth = a.transient_len + b.transient_len + 4 * a.period_len * b.period_len + 8
        assert lex_cmp(a, b) == naive_lex_cmp(a, b, depth)

    @given(ep_sequences(), ep_sequences(), ep_sequences())
    def test_total_order(self, a, b, c):
        ab, bc, ac = lex_cmp(a, b), lex_cmp(b, c), lex_cmp(a, c)
        assert lex_cmp(b, a) == -ab
        if ab != GREATER and bc != GREATER:
            assert ac != GREATER


class TestShiftReflect:
    def test_shift_rotates_period(self):
        assert seq([], [1, 2]).shift(1) == seq([], [2, 1])

    def test_shift_past_preperiod(self):
        s = seq([0, 1], [2, 1])
        assert s.shift(2) == seq([], [2, 1])

    def test_shift_zero_identity(self):
        s = seq([0, 2], [1, 2])
        assert s.shift(0) == s

    def test_reflect_constant(self):
        assert seq([], [0]).reflect() == seq([], [2])

    def test_reflect_admissible_prefix(self):
        # digitwise m-1-d on the word N (N-1) (N-2) N for m = 2N-1
        n = 4
        alph = Alphabet.unsigned(2 * n - 1)
        word = EpSequence((n, n - 1, n - 2, n), (0,), alph)
        expected = (n - 2, n - 1, n, n - 2)
        assert word.reflect().prefix(4) == expected

    @given(ep_sequences())
    def test_reflect_involution(self, s):
        assert s.reflect().reflect() == s

    @given(ep_sequences(), st.integers(0, 10), st.integers(0, 15))
    def test_shift_then_digit(self, s, k, i):
        assert s.shift(k).digit(i) == s.digit(k + i)


class TestSeriesValues:
    def test_zero_code(self):
        assert pi_value(seq([], [0]), 3, Fraction(1, 4)) == 0

    def test_top_code_is_one(self):
        for n in (2, 3, 5, 9):
            alph = Alphabet.signed(n)
            code = EpSequence((), (n - 1,), alph)
            assert pi_value(code, n, Fraction(1, n + 1)) == 1

    def test_single_term(self):
        code = EpSequence((2,), (0,), Alphabet.signed(3))
        beta = Fraction(1, 4)
        assert pi_value(code, 3, beta) == Fraction(3, 4)
        approx = partial_pi_sum(code, 3, beta, 50)
        assert abs(approx - Fraction(3, 4)) < Fraction(1, 10**20)

    def test_beta_series_max(self):
        for m in (3, 5):
            beta = Fraction(2, 2 * m)
            top = EpSequence((), (m - 1,), Alphabet.unsigned(m))
            assert beta_series_value(top, beta) == (m - 1) * beta / (1 - beta)

    def test_beta_series_periodic_example(self):
        s = EpSequence((), (2, 1), OM3)
        assert beta_series_value(s, Fraction(2, 5)) == Fraction(8, 7)
        approx = partial_beta_series(s, Fraction(2, 5), 60)
        assert abs(approx - Fraction(8, 7)) < Fraction(1, 10**20)

    @given(ep_sequences(Alphabet.signed(3)))
    def test_signed_antisymmetry(self, code):
        beta = Fraction(1, 4)
        assert pi_value(code, 3, beta) + pi_value(code.reflect(), 3, beta) == 0

    @given(ep_sequences())
    def test_reflection_complement(self, s):
        beta = Fraction(2, 5)
        total = beta_series_value(s, beta) + beta_series_value(s.reflect(), beta)
        assert total == 2 * beta / (1 - beta)

    @given(ep_sequences(Alphabet.signed(4)))
    def test_pi_bounds(self, code):
        v = pi_value(code, 4, Fraction(1, 5))
        assert -1 <= v <= 1

    @given(ep_sequences(Alphabet.unsigned(4)), st.integers(1, 24))
    @settings(deadline=None)
    def test_partial_sum_tail_bound(self, code, k):
        beta = Fraction(2, 9)
        full = pi_value(code, 4, beta)
        part = partial_pi_sum(code, 4, beta, k)
        assert abs(full - part) <= beta**k

    @given(ep_sequences(Alphabet.signed(3)), st.integers(1, 8))
    def test_tail_series_matches_shift(self, code, k):
        beta = Fraction(1, 4)
        direct = sum(code.digit(k + i) * beta ** (i + 1) for i in range(200))
        assert abs(tail_series_value(code, k, beta) - direct) < Fraction(1, 3**190)


class TestAlphabetShifts:
    def test_pm_to_m_example(self):
        code = EpSequence((-1, 0, 1), (0,), Alphabet.signed(2))
        shifted = to_expansion_alphabet(code, 2)
        assert shifted.prefix(3) == (0, 1, 2)

    def test_zero_maps_to_center(self):
        for n in (2, 4):
            code = EpSequence((), (0,), Alphabet.signed(n))
            assert to_expansion_alphabet(code, n) == EpSequence((), (n - 1,), Alphabet.unsigned(2 * n - 1))

    @given(ep_sequences(Alphabet.signed(3)))
    def test_round_trip(self, code):
        assert to_signed_alphabet(to_expansion_alphabet(code, 3), 3) == code


class TestParams:
    def test_accepts_interior(self):
        Params(2, Fraction(2, 5))

    def test_rejects_boundaries(self):
        with pytest.raises(ValueError):
            Params(2, Fraction(1, 3))
        with pytest.raises(ValueError):
            Params(2, Fraction(1, 2))
        with pytest.raises(ValueError):
            Params(1, Fraction(1, 2))


class TestCodeLiterals:
    def test_parse_with_preperiod(self):
        s = parse_code("-1,0|2,-2", Alphabet.signed(3))
        assert s.prefix(6) == (-1, 0, 2, -2, 2, -2)

    def test_parse_empty_preperiod(self):
        s = parse_code("|2,-2", Alphabet.signed(3))
        assert s.pre == ()

    def test_parse_errors_carry_position(self):
        with pytest.raises(ValueError, match="position"):
            parse_code("1,x|2", Alphabet.signed(3))
        with pytest.raises(ValueError):
            parse_code("1,2", Alphabet.signed(3))

    @given(ep_sequences(Alphabet.signed(3)))
    def test_round_trip(self, s):
        assert parse_code(format_code(s), Alphabet.signed(3)) == s


def test_concurrent_reads_are_safe():
    # immutable values: hashable and reusable across threads without locks
    s = seq([0, 1], [2, 1])
    assert hash(s) == hash(seq([0, 1], [2, 1]))
    d = {s: 1}
    assert d[seq([0, 1], [2, 1])] == 1

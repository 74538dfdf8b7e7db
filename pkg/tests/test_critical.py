from fractions import Fraction

import pytest

from cantorlab.admissible import peak_block, periodic_approximant
from cantorlab.critical import (
    COUNTABLE,
    POSITIVE_DIMENSION,
    QuadraticSurd,
    admissible_series_bounds,
    alpha_c,
    alpha_n,
    beta_c,
    beta_n,
    classify,
    separate,
    side_of_enclosure,
)
from cantorlab.expansion import quasi_greedy
from cantorlab.intervals import decimal_str, sqrt_interval
from cantorlab.sequences import Alphabet, EpSequence, Params, beta_series_value


class TestBetaC:
    def test_spot_values(self):
        for n, expected in ((2, "0.39433"), (5, "0.17221"), (9, "0.10111")):
            enc = beta_c(n, Fraction(1, 10**7))
            assert decimal_str(enc.interval.lo, 5) == expected
            assert decimal_str(enc.interval.hi, 5) == expected

    def test_sign_certificate(self):
        enc = beta_c(3, Fraction(1, 10**6))
        lo_bounds = admissible_series_bounds(3, enc.interval.lo, 256)
        hi_bounds = admissible_series_bounds(3, enc.interval.hi, 256)
        assert lo_bounds.hi < 1 < hi_bounds.lo

    def test_interval_inside_domain(self):
        for n in (2, 6):
            enc = beta_c(n, Fraction(1, 10**6))
            assert enc.interval.strictly_inside(Fraction(1, 2 * n - 1), Fraction(1, n))

    def test_refine_shrinks(self):
        enc = beta_c(2, Fraction(1, 10**4))
        finer = enc.refine(Fraction(1, 10**9))
        assert finer.interval.width <= Fraction(1, 10**9)
        assert finer.interval.lo >= enc.interval.lo
        assert finer.interval.hi <= enc.interval.hi

    def test_delta_brackets_admissible_word(self):
        # quasi-greedy expansions of 1 at the enclosure endpoints bracket the
        # admissible word (the map beta -> delta(beta) is decreasing)
        from cantorlab.admissible import min_admissible

        n = 2
        enc = beta_c(n, Fraction(1, 10**9))
        m = 2 * n - 1
        lam = min_admissible(m, 24)
        lo_delta = quasi_greedy(Fraction(1), enc.interval.lo, m, 24)
        hi_delta = quasi_greedy(Fraction(1), enc.interval.hi, m, 24)
        assert hi_delta <= lam <= lo_delta


class TestAlphaC:
    def test_exact_quadratic_values(self):
        # (3-sqrt(5))/2 for N=2 and 5-sqrt(24) for N=9
        for n, shift, radicand in ((2, Fraction(3, 2), Fraction(5, 4)), (9, Fraction(5), Fraction(24))):
            surd, iv = alpha_c(n, Fraction(1, 10**9))
            root = sqrt_interval(radicand, Fraction(1, 10**12))
            assert shift - root.hi <= iv.hi and iv.lo <= shift - root.lo

    def test_spot_value(self):
        _, iv = alpha_c(4, Fraction(1, 10**7))
        assert decimal_str(iv.lo, 5) == "0.20871" == decimal_str(iv.hi, 5)

    def test_defining_polynomial_identity(self):
        # beta_series((N (N-1)^inf), a) - 1 == -(a^2-(N+1)a+1)/(1-a) as rational
        # functions: checked exactly at five sample points
        for n in (2, 5, 9):
            seq = EpSequence((n,), (n - 1,), Alphabet.unsigned(2 * n - 1))
            for a in (Fraction(1, 7), Fraction(2, 9), Fraction(1, 3), Fraction(3, 11), Fraction(1, 17)):
                lhs = beta_series_value(seq, a) - 1
                rhs = -(a * a - (n + 1) * a + 1) / (1 - a)
                assert lhs == rhs

    def test_side_of(self):
        surd = QuadraticSurd(2)
        assert surd.side_of(Fraction(38, 100)) == -1
        assert surd.side_of(Fraction(39, 100)) == 1


class TestApproximantRoots:
    def test_beta_n_ordering(self):
        for n_parts in (2, 3):
            b3 = beta_n(n_parts, 3)
            b5 = beta_n(n_parts, 5)
            b7 = beta_n(n_parts, 7)
            bc = beta_c(n_parts, Fraction(1, 10**7))
            assert separate(b3, b5) == -1
            assert separate(b5, b7) == -1
            assert separate(b7, bc) == -1

    def test_beta_n_certificate_and_domain(self):
        for n_parts, n in ((2, 3), (3, 5)):
            enc = beta_n(n_parts, n)
            seq = periodic_approximant(n_parts, n)
            lo_val = beta_series_value(seq, enc.interval.lo)
            hi_val = beta_series_value(seq, enc.interval.hi)
            assert (lo_val - 1) < 0 < (hi_val - 1)
            assert enc.in_domain
            assert enc.interval.strictly_inside(Fraction(1, 2 * n_parts - 1), Fraction(1, n_parts))

    def test_beta_n_rejects_even_index(self):
        with pytest.raises(ValueError):
            beta_n(2, 4)

    def test_alpha_n_ordering(self):
        for n_parts in (2, 3):
            encs = [alpha_n(n_parts, n) for n in range(1, 9)]
            for a, b in zip(encs, encs[1:]):
                assert separate(a, b) == -1
            surd = QuadraticSurd(n_parts)
            top = surd.enclosure(Fraction(1, 10**12))
            assert encs[-1].interval.hi < top.lo

    def test_alpha_1_boundary_flag(self):
        enc = alpha_n(2, 1)
        assert not enc.in_domain
        assert Fraction(1, 3) in enc.interval
        # N >= 3 puts the first root strictly inside
        assert alpha_n(3, 1).in_domain


class TestClassify:
    def test_window_between_critical_points(self):
        u, s = classify(Params(2, Fraction(39, 100)))
        assert (u.verdict, s.verdict) == (POSITIVE_DIMENSION, COUNTABLE)

    def test_below_alpha(self):
        u, s = classify(Params(2, Fraction(38, 100)))
        assert (u.verdict, s.verdict) == (POSITIVE_DIMENSION, POSITIVE_DIMENSION)

    def test_above_beta_c(self):
        u, s = classify(Params(3, Fraction(3, 10)))
        assert (u.verdict, s.verdict) == (COUNTABLE, COUNTABLE)

    def test_side_of_enclosure_terminates(self):
        enc = beta_c(2, Fraction(1, 100))
        assert side_of_enclosure(Fraction(39433, 100000), enc) in (-1, 1)


def test_ordering_chain_exact():
    for n in range(2, 10):
        surd = QuadraticSurd(n)
        # 1/(2N-1) < alpha_c via the quadratic sign, beta_c < 1/N via enclosure
        assert surd.side_of(Fraction(1, 2 * n - 1)) == -1
        alpha_iv = surd.enclosure(Fraction(1, 10**8))
        enc = beta_c(n, Fraction(1, 10**8))
        assert alpha_iv.hi < enc.interval.lo
        assert enc.interval.hi < Fraction(1, n)

from fractions import Fraction

import pytest

from cantorlab.admissible import (
    doubling_word,
    min_admissible,
    min_admissible_doubling,
    peak_block,
    periodic_approximant,
    reflect_word,
    thue_morse,
    tile_blocks,
)
from cantorlab.sequences import EpSequence, GREATER, LESS, lex_cmp, word_cmp

TM_PREFIX = (0, 1, 1, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 1, 1, 0, 1)


class TestThueMorse:
    def test_printed_prefix(self):
        assert tuple(thue_morse(i) for i in range(17)) == TM_PREFIX

    def test_even_recursion(self):
        assert all(thue_morse(2 * i) == thue_morse(i) for i in range(2**12))

    def test_odd_recursion(self):
        assert all(thue_morse(2 * i + 1) == 1 - thue_morse(i) for i in range(2**12))


class TestMinAdmissible:
    def test_general_prefix_shape(self):
        for n in range(2, 10):
            word = min_admissible(2 * n - 1, 12)
            assert word == (n, n - 1, n - 2, n, n - 2, n - 1, n, n - 1, n - 2, n - 1, n, n - 2)

    def test_even_alphabet(self):
        # m = 4: digits are 1 + thue_morse
        assert min_admissible(4, 7) == (2, 2, 1, 2, 1, 1, 2)

    def test_power_positions_alternate(self):
        for n_parts in (2, 3, 5):
            word = min_admissible(2 * n_parts - 1, 2**10)
            for n in range(10):
                expected = n_parts if n % 2 == 0 else n_parts - 1
                assert word[2**n - 1] == expected

    def test_doubling_recursion_agrees(self):
        for n_parts in range(2, 10):
            assert min_admissible_doubling(n_parts, 4096) == min_admissible(2 * n_parts - 1, 4096)

    def test_smallest_admissible_shift_property(self):
        # every shift and every reflected shift drops strictly below; the tie
        # can persist through k digits (reflection rule), never further
        for n_parts in (2, 3):
            m = 2 * n_parts - 1
            length = 2**12
            word = min_admissible(m, 2 * length + 4)
            for k in range(1, length + 1):
                window = word[k : 2 * k + 2]
                head = word[: k + 2]
                assert window < head
                assert reflect_word(window, m) < head


class TestBlocks:
    def test_small_doubling_words(self):
        assert doubling_word(2, 0) == (2,)
        assert doubling_word(2, 1) == (2, 1)
        assert peak_block(2, 2) == (2, 1)

    def test_approximant_prefix_matches(self):
        for n_parts, n in ((2, 3), (3, 2), (4, 4)):
            c = periodic_approximant(n_parts, n)
            lam = min_admissible(2 * n_parts - 1, 2 ** (n + 1))
            assert c.prefix(2 ** (n + 1)) == lam

    def test_block_pair_shapes(self):
        upper, lower = tile_blocks(3, 2)
        lam = min_admissible(5, 3)
        assert upper == (2,) + lam
        assert lower == (1,) + lam

    def test_double_block_below_next(self):
        for n_parts in (2, 3, 4, 5):
            m = 2 * n_parts - 1
            for n in range(0, 11):
                w = doubling_word(n_parts, n)
                nxt = doubling_word(n_parts, n + 1)
                assert word_cmp(w + reflect_word(w, m), nxt) == LESS

    def test_approximants_decrease(self):
        # (P7): C_0 > C_1 > ... > C_8 > the admissible word prefix
        n_parts = 3
        m = 2 * n_parts - 1
        seqs = [periodic_approximant(n_parts, n) for n in range(9)]
        for a, b in zip(seqs, seqs[1:]):
            assert lex_cmp(a, b) == GREATER
        lam = min_admissible(m, 2**11)
        for c in seqs:
            assert c.prefix(2**11) > lam

    def test_double_block_powers_increase(self):
        # (P8): (w_0 w_0bar)^inf < (w_1 w_1bar)^inf < ... < admissible word
        n_parts = 2
        m = 2 * n_parts - 1
        from cantorlab.sequences import Alphabet

        seqs = []
        for n in range(9):
            w = doubling_word(n_parts, n)
            seqs.append(EpSequence((), w + reflect_word(w, m), Alphabet.unsigned(m)))
        for a, b in zip(seqs, seqs[1:]):
            assert lex_cmp(a, b) == LESS
        lam = min_admissible(m, 2**11)
        for s in seqs:
            assert s.prefix(2**11) < lam

    def test_exponent_guard(self):
        with pytest.raises(ValueError):
            doubling_word(2, 17)

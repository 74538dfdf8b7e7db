"""Exact-arithmetic analysis of homogeneous Cantor sets intersected with
their translates: unique signed codes, self-similarity of the intersection,
and the two critical bases separating the regimes."""

from .sequences import Alphabet, EpSequence, Params, lex_cmp, parse_code, pi_value
from .expansion import Verdict, quasi_greedy, delta_of_beta
from .critical import alpha_c, beta_c, classify
from .uniqueness import TranslationCode, enum_codes, neighborhoods, unique_exact, unique_lex
from .selfsimilar import build_ifs, dims, in_selfsimilar_set, verify_ifs

__all__ = [
    "Alphabet",
    "EpSequence",
    "Params",
    "TranslationCode",
    "Verdict",
    "alpha_c",
    "beta_c",
    "build_ifs",
    "classify",
    "delta_of_beta",
    "dims",
    "enum_codes",
    "in_selfsimilar_set",
    "lex_cmp",
    "neighborhoods",
    "parse_code",
    "pi_value",
    "quasi_greedy",
    "unique_exact",
    "unique_lex",
    "verify_ifs",
]

__version__ = "0.1.0"

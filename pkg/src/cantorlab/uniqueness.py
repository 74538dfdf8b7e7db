"""Deciding uniqueness of signed codes, with three independent oracles.

* ``unique_exact`` -- finitely many exact rational tail-sum inequalities;
  total on eventually periodic codes.
* ``enum_codes`` -- remainder-window branch and bound; the difference set
  of the Cantor set fills [-1, 1] in this parameter range, so a digit
  prefix extends to a full code iff its scaled remainder stays in [-1, 1].
* ``neighborhoods`` -- per-level counts of translated components meeting a
  component, driven by a compatible-pair tree over the same remainders.

``unique_lex`` reruns the decision through the order-theoretic expansion
test after shifting digits into {0..2N-2}, for cross-validation and for
the symbolic critical base where the comparison word is the smallest
admissible sequence itself.
"""

from __future__ import annotations

import itertools
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction

from .admissible import MinAdmissibleDigits, reflect_word, tile_blocks
from .critical import RootEnclosure, beta_n, side_of_enclosure
from .expansion import DEFAULT_DEPTH_CAP, Verdict, unique_expansion_test, unique_expansion_test_rational
from .intervals import RatInterval, golden_ratio_interval, log_interval, neg_log_interval
from .sequences import (
    Alphabet,
    EpSequence,
    Params,
    pi_value,
    tail_series_value,
    to_expansion_alphabet,
)


@dataclass(frozen=True)
class TranslationCode:
    """A signed digit code together with the parameters it lives under."""

    code: EpSequence
    params: Params

    def __post_init__(self) -> None:
        if self.code.alphabet != self.params.signed_alphabet:
            raise ValueError("code alphabet does not match the signed alphabet of params")

    @property
    def t(self) -> Fraction:
        return pi_value(self.code, self.params.N, self.params.beta)


def unique_exact(tc: TranslationCode) -> bool:
    """Total decision: is tc.code the only signed code of its value?

    Checks, at every distinct shift position k, the strict tail bounds
    sum_{l>=1} t_{k+l} beta^l < (1-N beta)/(1-beta) when t_k < N-1 and
    > -(1-N beta)/(1-beta) when t_k > 1-N.
    """
    p = tc.params
    threshold = (1 - p.N * p.beta) / (1 - p.beta)
    code = tc.code
    for k in range(1, code.distinct_shift_count() + 1):
        d = code.digit(k - 1)
        tail = tail_series_value(code, k, p.beta)
        if d < p.N - 1 and not (tail < threshold):
            return False
        if d > 1 - p.N and not (tail > -threshold):
            return False
    return True


def unique_lex(tc: TranslationCode, depth_cap: int = DEFAULT_DEPTH_CAP) -> Verdict:
    """Order-theoretic route: shift into {0..2N-2} and compare against delta."""
    p = tc.params
    shifted = to_expansion_alphabet(tc.code, p.N)
    return unique_expansion_test_rational(shifted, p.beta, p.m, depth_cap)


def unique_lex_at_critical(eps: EpSequence, n_parts: int,
                           depth_cap: int = DEFAULT_DEPTH_CAP) -> Verdict:
    """Same test at the critical base, where delta is the admissible word itself."""
    return unique_expansion_test(eps, MinAdmissibleDigits(2 * n_parts - 1), depth_cap)


@dataclass(frozen=True)
class EnumReport:
    counts: tuple[int, ...]  # counts[k-1] = number of surviving prefixes at depth k
    exploded_at: int | None

    def consistent_depth(self) -> int:
        """Largest depth through which exactly one prefix survives."""
        d = 0
        for c in self.counts:
            if c != 1:
                break
            d += 1
        return d

    def branch_depth(self) -> int | None:
        for k, c in enumerate(self.counts, start=1):
            if c > 1:
                return k
        return None


def _surviving_digits(r: Fraction, p: Params) -> list[int]:
    """Digits d with (r - d*scale)/beta still in the closed window [-1, 1]."""
    out = []
    for d in range(1 - p.N, p.N):
        nxt = (r - d * p.scale) / p.beta
        if -1 <= nxt <= 1:
            out.append(d)
    return out


def enum_codes(t: Fraction, params: Params, depth: int,
               node_budget: int = 200_000) -> EnumReport:
    """Count code prefixes of t by exact remainder-window branch and bound."""
    t = Fraction(t)
    if not -1 <= t <= 1:
        raise ValueError("t must lie in [-1, 1]")
    level: list[Fraction] = [t]
    counts: list[int] = []
    exploded = None
    for k in range(1, depth + 1):
        nxt: list[Fraction] = []
        for r in level:
            for d in _surviving_digits(r, params):
                nxt.append((r - d * params.scale) / params.beta)
        counts.append(len(nxt))
        if len(nxt) > node_budget:
            exploded = k
            break
        level = nxt
    return EnumReport(tuple(counts), exploded)


def code_prefix_tree(t: Fraction, params: Params, depth: int,
                     node_budget: int = 100_000):
    """Yield (prefix, remainder) pairs in depth-first digit order."""
    t = Fraction(t)
    if not -1 <= t <= 1:
        raise ValueError("t must lie in [-1, 1]")
    emitted = 0
    stack = [((), t)]
    while stack:
        prefix, r = stack.pop()
        if prefix:
            yield prefix, r
            emitted += 1
            if emitted >= node_budget:
                return
        if len(prefix) >= depth:
            continue
        for d in reversed(_surviving_digits(r, params)):
            stack.append((prefix + (d,), (r - d * params.scale) / params.beta))


@dataclass(frozen=True)
class NeighborhoodReport:
    max_sizes: tuple[int, ...]  # per level 1..depth (1 or 2)
    truncated_at: int | None

    def all_single_through(self, depth: int) -> bool:
        if self.truncated_at is not None and self.truncated_at <= depth:
            return False
        return all(s <= 1 for s in self.max_sizes[:depth])

    def first_double(self) -> int | None:
        for k, s in enumerate(self.max_sizes, start=1):
            if s >= 2:
                return k
        return None


def _digits_compatible(e1: int, e2: int, n_parts: int) -> bool:
    # the consecutive sets Omega_N ^ (Omega_N + e) overlap iff the spread
    # of {0, e1, e2} fits inside the base alphabet
    return max(0, e1, e2) - min(0, e1, e2) <= n_parts - 1

def neighborhoods(t: Fraction, params: Params, depth: int,
                  state_budget: int = 200_000) -> NeighborhoodReport:
    """Max neighborhood size per level, via a compatible-pair remainder tree.

    A level-k component of the translated set meets two distinct level-k
    components iff two distinct surviving difference prefixes are digitwise
    compatible; only the pair of scaled remainders and a became-distinct
    flag matter for the future, so states are deduplicated on that triple.
    """
    t = Fraction(t)
    if not -1 <= t <= 1:
        raise ValueError("t must lie in [-1, 1]")
    states: set[tuple[Fraction, Fraction, bool]] = {(t, t, False)}
    sizes: list[int] = []
    truncated = None
    for k in range(1, depth + 1):
        nxt: set[tuple[Fraction, Fraction, bool]] = set()
        for r1, r2, distinct in states:
            d1s = _surviving_digits(r1, params)
            d2s = d1s if r2 == r1 else _surviving_digits(r2, params)
            for e1 in d1s:
                n1 = (r1 - e1 * params.scale) / params.beta
                for e2 in d2s:
                    if not _digits_compatible(e1, e2, params.N):
                        continue
                    n2 = (r2 - e2 * params.scale) / params.beta
                    flag = distinct or (e1 != e2)
                    pair = (n1, n2, flag) if n1 <= n2 else (n2, n1, flag)
                    nxt.add(pair)
        sizes.append(2 if any(f for _, _, f in nxt) else 1)
        if len(nxt) > state_budget:
            truncated = k
            break
        states = nxt
    return NeighborhoodReport(tuple(sizes), truncated)


def _level_endpoints(params: Params, k: int):
    """Left endpoints of all level-k components, in lexicographic digit order."""
    weights = [params.scale * params.beta**i for i in range(k)]
    out = []
    for digits in itertools.product(range(params.N), repeat=k):
        out.append((digits, sum(w * d for w, d in zip(weights, digits))))
    return out


def neighborhood_sets(t: Fraction, params: Params, level: int,
                      cap: int = 20_000) -> dict[tuple[int, ...], list[tuple[int, ...]]]:
    """Explicit neighborhoods at one level: J -> sorted list of meeting I.

    Components are closed intervals of length beta^k; sharing an endpoint
    counts as meeting.  Intended for small levels (figures, spot checks).
    """
    t = Fraction(t)
    if params.N**level > cap:
        raise ValueError(f"level {level} needs {params.N**level} components, above the cap {cap}")
    comps = _level_endpoints(params, level)
    length = params.beta**level
    translated = [(digits, left + t) for digits, left in comps]
    lefts = [left for _, left in translated]
    result: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for digits, left in comps:
        lo_idx = bisect_left(lefts, left - length)
        hi_idx = bisect_right(lefts, left + length)
        result[digits] = [translated[i][0] for i in range(lo_idx, hi_idx)]
    return result


def consecutive_products(tc: TranslationCode) -> tuple[tuple[tuple[int, int], ...], tuple[tuple[int, int], ...]]:
    """Per-position branch sets D_l = Omega_N ^ (Omega_N + t_l) as (lo, hi) runs.

    Returns runs aligned with the code's canonical preperiod and period.
    Only meaningful when the code is the unique code of its value.
    """
    if not unique_exact(tc):
        raise ValueError("branch sets are only the intersection's cylinder structure for unique codes")
    n = tc.params.N

    def run(d: int) -> tuple[int, int]:
        return (max(0, d), n - 1 + min(0, d))

    return tuple(run(d) for d in tc.code.pre), tuple(run(d) for d in tc.code.per)


def derived_code(tc: TranslationCode) -> EpSequence:
    """The branch-count-minus-one sequence (N-1-|t_l|) over {0..N-1}."""
    n = tc.params.N
    return tc.code.map_digits(lambda d: n - 1 - abs(d), Alphabet.unsigned(n))


# ---------------------------------------------------------------------------
# Subshift lower bound machinery
# ---------------------------------------------------------------------------

ADJACENCY = (
    (0, 1, 1, 0),
    (0, 0, 1, 0),
    (1, 0, 0, 1),
    (1, 0, 0, 0),
)


def characteristic_polynomial(matrix) -> tuple[Fraction, ...]:
    """Monic characteristic polynomial coefficients (highest degree first)."""
    n = len(matrix)
    a = [[Fraction(matrix[i][j]) for j in range(n)] for i in range(n)]
    coeffs = [Fraction(1)]
    m = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A (M_{k-1} + c_{k-1} I)
        shifted = [row[:] for row in m]
        for i in range(n):
            shifted[i][i] += coeffs[-1]
        m = [[sum(a[i][l] * shifted[l][j] for l in range(n)) for j in range(n)] for i in range(n)]
        trace = sum(m[i][i] for i in range(n))
        coeffs.append(-trace / k)
    return tuple(coeffs)


def _divide_polynomial(num: tuple[Fraction, ...], den: tuple[Fraction, ...]):
    """Exact polynomial division; returns (quotient, remainder) coefficient tuples."""
    num = list(num)
    dn = len(den) - 1
    quot = []
    while len(num) - 1 >= dn:
        lead = num[0] / den[0]
        quot.append(lead)
        for i in range(len(den)):
            num[i] -= lead * den[i]
        num.pop(0)
    return tuple(quot), tuple(num)


def spectral_radius_interval(tol: Fraction = Fraction(1, 10**10)) -> RatInterval:
    """Certified enclosure of the spectral radius of the block adjacency matrix.

    The characteristic polynomial splits exactly as (x^2 - x - 1) q(x) with
    q = x^2 + x + 1, whose complex roots have modulus 1; the spectral radius
    is therefore the golden ratio exactly.
    """
    poly = characteristic_polynomial(ADJACENCY)
    quot, rem = _divide_polynomial(poly, (Fraction(1), Fraction(-1), Fraction(-1)))
    if any(rem) or quot != (Fraction(1), Fraction(1), Fraction(1)):
        raise AssertionError("adjacency spectrum changed; golden-ratio certificate is void")
    return golden_ratio_interval(tol)


def subshift_tiles(n_parts: int, n: int) -> tuple[tuple[int, ...], ...]:
    """The four walk blocks, indexed to match ADJACENCY rows."""
    m = 2 * n_parts - 1
    upper, lower = tile_blocks(n_parts, n)
    return upper, lower, reflect_word(upper, m), reflect_word(lower, m)


def random_subshift_walk(rng, length: int) -> list[int]:
    """A uniformly random admissible tile walk of the given length."""
    allowed = [[j for j in range(4) if ADJACENCY[i][j]] for i in range(4)]
    state = rng.randrange(4)
    walk = [state]
    while len(walk) < length:
        state = rng.choice(allowed[state])
        walk.append(state)
    return walk


def walk_to_sequence(walk: list[int], n_parts: int, n: int) -> EpSequence:
    """Close a finite tile walk into an eventually periodic subshift element.

    Routes the walk into the 2-cycle between tiles 2 and 0 and repeats it.
    """
    tiles = subshift_tiles(n_parts, n)
    walk = list(walk)
    hop_to_xibar = {0: [2], 1: [2], 2: [], 3: [0, 2]}
    walk.extend(hop_to_xibar[walk[-1]])
    pre: tuple[int, ...] = ()
    for idx in walk:
        pre = pre + tiles[idx]
    per = tiles[0] + tiles[2]
    return EpSequence(pre, per, Alphabet.unsigned(2 * n_parts - 1))


def subshift_dim_bound(params: Params, n: int,
                       beta_n_enclosure: RootEnclosure | None = None) -> RatInterval:
    """Certified lower bound log(golden)/( -2^n log beta ) for beta below the
    n-th approximant base."""
    enc = beta_n_enclosure if beta_n_enclosure is not None else beta_n(params.N, n)
    if side_of_enclosure(params.beta, enc) >= 0:
        raise ValueError("the subshift bound needs beta below the approximant base")
    tol = Fraction(1, 10**12)
    phi = golden_ratio_interval(Fraction(1, 10**12))
    log_phi = RatInterval(log_interval(phi.lo, tol).lo, log_interval(phi.hi, tol).hi)
    denom = neg_log_interval(params.beta, tol).scale(Fraction(2**n))
    return log_phi.div_positive(denom)

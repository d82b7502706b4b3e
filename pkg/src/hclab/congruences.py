"""The verdict engine: one verifier per congruence claim.

Every verifier computes its left-hand side exactly, takes the p-adic
valuation, and compares against the claimed modulus exponent.  Theorems whose
strength depends on side conditions (the tier ladders) resolve the largest
provable tier first, then judge the congruence at that tier; callers may pin
a tier instead to probe the ladder rung by rung.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .bernoulli import BernoulliCache, bernoulli, is_irregular_pair
from .errors import HypothesisViolated
from .exact import binomial, vp
from .harmonic import harmonic
from .primes import fermat_quotient

EXPANSION_IDS = ("e10ee", "e10eed", "e10eee", "e10eeeff")
REMARK0_IDS = ("e10eeez", "e10eeezz", "e9a", "e10eeea", "e10eeee", "e10eeeb")
PROP3_IDS = ("e8bbf", "e10eeeb1", "e9bb", "e9bbs")


@dataclass(frozen=True)
class CaseSpec:
    theorem_id: str
    p: int
    params: tuple[tuple[str, int], ...] = ()

    @staticmethod
    def make(theorem_id: str, p: int, **params: int) -> "CaseSpec":
        return CaseSpec(theorem_id, p, tuple(sorted(params.items())))

    def sort_key(self):
        return (self.theorem_id, self.p, self.params)


@dataclass(frozen=True)
class Verdict:
    case: CaseSpec
    required_exponent: int
    achieved_valuation: int | float
    passed: bool
    lhs: Fraction
    tier: int | None = None
    lower_tiers: tuple[tuple[int, bool], ...] | None = None


def _verdict(theorem_id, p, lhs, exponent, tier=None, lower=None, **params) -> Verdict:
    v = vp(lhs, p)
    return Verdict(
        case=CaseSpec.make(theorem_id, p, **params),
        required_exponent=exponent,
        achieved_valuation=v,
        passed=v >= exponent,
        lhs=lhs,
        tier=tier,
        lower_tiers=lower,
    )


def _require(cond: bool, msg: str):
    if not cond:
        raise HypothesisViolated(msg)


# -- coefficient families -----------------------------------------------------


def coeff_c(j: int, cache: BernoulliCache | None = None) -> Fraction:
    """2 B_{j+2} + (-1)^j B_{j+1} + 1/2; equals 1/3 at j = 0 and j = 1."""
    return (
        2 * bernoulli(j + 2, cache)
        + (-1) ** j * bernoulli(j + 1, cache)
        + Fraction(1, 2)
    )


def coeff_a(h: int, cache: BernoulliCache | None = None) -> Fraction:
    """4 (2^(2h+2) - 1) B_{2h+2} / ((2h+1)(2h+2)); equals -1/6 at h = 1."""
    return Fraction(4 * (2 ** (2 * h + 2) - 1), (2 * h + 1) * (2 * h + 2)) * bernoulli(
        2 * h + 2, cache
    )


def coeff_z(p: int, n: int, h: int, cache: BernoulliCache | None = None) -> Fraction:
    """B_{p^(n-1)(p-1) - 2h} / (2h)."""
    return bernoulli(p ** (n - 1) * (p - 1) - 2 * h, cache) / (2 * h)


# -- classical congruences ----------------------------------------------------


def verify_wolstenholme(p: int) -> Verdict:
    """H_{p-1} == 0 (mod p^2) for p >= 5."""
    _require(p >= 5, "needs p >= 5")
    return _verdict("wolstenholme", p, harmonic(1, p - 1), 2)


def verify_wolstenholme_refined(p: int) -> Verdict:
    """H_{p-1} + (p/2) H^(2)_{p-1} == 0 (mod p^4) for p >= 7."""
    _require(p >= 7, "needs p >= 7")
    lhs = harmonic(1, p - 1) + Fraction(p, 2) * harmonic(2, p - 1)
    return _verdict("wolstenholme-refined", p, lhs, 4)


def verify_eisenstein(p: int) -> Verdict:
    """H_{(p-1)/2} + 2 q_p == 0 (mod p) for odd p."""
    _require(p >= 3, "needs an odd prime")
    lhs = harmonic(1, (p - 1) // 2) + 2 * fermat_quotient(p)
    return _verdict("eisenstein", p, lhs, 1)


def verify_lehmer(p: int) -> Verdict:
    """H_{(p-1)/2} + 2 q_p - p q_p^2 == 0 (mod p^2) for odd p."""
    _require(p >= 3, "needs an odd prime")
    q = fermat_quotient(p)
    lhs = harmonic(1, (p - 1) // 2) + 2 * q - p * q * q
    return _verdict("lehmer", p, lhs, 2)


# -- p-adic expansions of the harmonic numbers --------------------------------


def verify_expansion_truncation(which: str, k: int, p: int, J: int) -> Verdict:
    """Truncation of one of the four harmonic expansions at j < J.

    The left-hand side is (truncated series) - (target value); every omitted
    term carries p^j with j >= J times a p-integral cofactor, so the claimed
    exponent is J.
    """
    if which not in EXPANSION_IDS:
        raise ValueError(f"unknown expansion {which!r}")
    _require(k >= 1, "needs k >= 1")
    _require(J >= 0, "needs J >= 0")
    half = (p - 1) // 2
    if which == "e10ee":
        series = (-1) ** k * sum(
            (binomial(j + k - 1, j) * harmonic(k + j, p - 1) * Fraction(p) ** j
             for j in range(J)),
            Fraction(0),
        )
        lhs = series - harmonic(k, p - 1)
    elif which == "e10eed":
        _require(p % 2 == 1, "needs odd p")
        series = sum(
            (binomial(j + 2 * k - 1, j) * harmonic(2 * k + j, half) * Fraction(p) ** j
             for j in range(1, J)),
            Fraction(0),
        )
        head = 2 * harmonic(2 * k, half) if J >= 1 else Fraction(0)
        lhs = head + series - harmonic(2 * k, p - 1)
    elif which == "e10eee":
        _require(p % 2 == 1, "needs odd p")
        series = (-1) ** k * sum(
            (binomial(j + k - 1, j)
             * Fraction(1, 2 ** (j + k))
             * harmonic(k + j, half)
             * Fraction(p) ** j
             for j in range(1, J)),
            Fraction(0),
        )
        head = (
            Fraction(1 + (-1) ** k, 2**k) * harmonic(k, half) if J >= 1 else Fraction(0)
        )
        lhs = head + series - harmonic(k, p - 1)
    else:  # e10eeeff
        _require(p % 2 == 1, "needs odd p")
        series = sum(
            (binomial(j + 2 * k - 1, j)
             * Fraction(2 ** (2 * k + j) - 1, 2**j)
             * harmonic(2 * k + j, half)
             * Fraction(p) ** j
             for j in range(1, J)),
            Fraction(0),
        )
        lhs = 2 * (2 ** (2 * k) - 1) * harmonic(2 * k, half) + series
    return _verdict(f"expansion-{which}", p, lhs, J, k=k, J=J)


def verify_cor_remark0(which: str, k: int, p: int) -> Verdict:
    """The six two-term congruences read off from the expansions (odd p)."""
    _require(p % 2 == 1 and p >= 3, "needs odd p")
    _require(k >= 1, "needs k >= 1")
    half = (p - 1) // 2
    if which == "e10eeez":
        lhs, exponent = harmonic(2 * k - 1, p - 1), 1
    elif which == "e10eeezz":
        lhs = harmonic(2 * k - 1, p - 1) + p * (2 * k - 1) * harmonic(2 * k, half)
        exponent = 2
    elif which == "e9a":
        lhs = harmonic(2 * k - 1, p - 1) + Fraction(p, 2) * (2 * k - 1) * harmonic(
            2 * k, p - 1
        )
        exponent = 2
    elif which == "e10eeea":
        lhs = (
            harmonic(2 * k, p - 1)
            - 2 * harmonic(2 * k, half)
            - p * 2 * k * harmonic(2 * k + 1, half)
        )
        exponent = 2
    elif which == "e10eeee":
        lhs = (2 ** (2 * k) - 1) * harmonic(2 * k, half) + p * Fraction(k, 2) * (
            2 ** (2 * k + 1) - 1
        ) * harmonic(2 * k + 1, half)
        exponent = 2
    elif which == "e10eeeb":
        lhs = 2 * harmonic(2 * k, half) - (2 ** (2 * k + 1) - 1) * harmonic(
            2 * k, p - 1
        )
        exponent = 2
    else:
        raise ValueError(f"unknown congruence {which!r}")
    return _verdict(f"cor-remark0-{REMARK0_IDS.index(which) + 1}", p, lhs, exponent, k=k)


# -- Bernoulli-valued congruences for H^(2k), H^(2k-1) ------------------------


def verify_thm_prop3(which: str, k: int, p: int,
                     cache: BernoulliCache | None = None) -> Verdict:
    """The four congruences expressing harmonic numbers through B_{p-1-2k}."""
    _require(k >= 1, "needs k >= 1")
    if which == "e9bbs":
        _require(p >= 2 * k + 3 or p == 2 * k + 1, "needs p >= 2k+3 or p = 2k+1")
    else:
        _require(p >= 2 * k + 3, "needs p >= 2k+3")
    half = (p - 1) // 2
    b = bernoulli(p - 1 - 2 * k, cache)
    if which == "e8bbf":
        lhs = harmonic(2 * k, p - 1) - p * Fraction(2 * k, 2 * k + 1) * b
        exponent = 2
    elif which == "e10eeeb1":
        lhs = harmonic(2 * k, half) - p * Fraction(k * (2 ** (2 * k + 1) - 1),
                                                   2 * k + 1) * b
        exponent = 2
    elif which == "e9bb":
        lhs = harmonic(2 * k - 1, p - 1) + p * p * Fraction(k * (2 * k - 1),
                                                            2 * k + 1) * b
        exponent = 3
    elif which == "e9bbs":
        lhs = harmonic(2 * k + 1, half) - Fraction(2 * (1 - 4**k), 2 * k + 1) * b
        exponent = 1
    else:
        raise ValueError(f"unknown congruence {which!r}")
    return _verdict(f"prop3-{PROP3_IDS.index(which) + 1}", p, lhs, exponent, k=k)


# -- the tier-ladder theorem for H^(j)_{p-1} ----------------------------------


def _ee10bis_tier(p: int, n: int, i: int,
                  cache: BernoulliCache | None = None) -> int:
    two_k = p - 2 * n - 2 * i - 5
    if two_k >= 2 and two_k % 2 == 0 and is_irregular_pair(p, two_k, cache):
        return 5
    if p >= 2 * n + 2 * i + 7:
        return 4
    if p >= 5 or (p == 3 and n % 3 == 0):
        return 3
    if p >= 3:
        return 2
    return 1


def verify_thm_ee10bis(p: int, n: int, i: int, tier: int | None = None,
                       cache: BernoulliCache | None = None) -> Verdict:
    """sum(C(j+2i,2i) B_j H^(j+2i+1)_{p-1} (-p)^j, j=0..2n+1) mod p^(2n+m).

    The tier m is resolved to the largest value whose condition holds unless
    the caller pins one.  The verdict also records pass/fail at every lower
    tier exponent.
    """
    _require(p >= 2, "needs a prime")
    _require(n >= 0 and i >= 0, "needs n, i >= 0")
    m = _ee10bis_tier(p, n, i, cache) if tier is None else tier
    lhs = sum(
        (binomial(j + 2 * i, 2 * i)
         * bernoulli(j, cache)
         * harmonic(j + 2 * i + 1, p - 1)
         * Fraction(-p) ** j
         for j in range(2 * n + 2)),
        Fraction(0),
    )
    v = vp(lhs, p)
    lower = tuple((mm, v >= 2 * n + mm) for mm in range(1, m + 1))
    return _verdict("thm-ee10bis", p, lhs, 2 * n + m, tier=m, lower=lower, n=n, i=i)


def verify_cor_ee10biss(p: int, i: int, k: int,
                        cache: BernoulliCache | None = None) -> Verdict:
    """The same series truncated at j < k is divisible by p^k (odd p)."""
    _require(p % 2 == 1 and p >= 3, "needs odd p")
    _require(k >= 1, "needs k >= 1")
    lhs = sum(
        (binomial(j + 2 * i, 2 * i)
         * bernoulli(j, cache)
         * harmonic(j + 2 * i + 1, p - 1)
         * Fraction(-p) ** j
         for j in range(k)),
        Fraction(0),
    )
    return _verdict("cor-ee10biss", p, lhs, k, i=i, k=k)


# -- the half-index even-order ladder -----------------------------------------


def _eecj_tier(p: int, n: int, i: int, cache: BernoulliCache | None) -> int:
    half = (p - 1) // 2
    cond = (
        binomial(2 * n + 2 * i, 2 * n + 2)
        * (2 ** (2 * n + 2 * i + 1) - 1)
        * harmonic(2 * n + 2 * i + 1, half)
        * ((2 * n + 3) * bernoulli(2 * n + 2, cache) + Fraction(n, 2))
    )
    two_k = p - 2 * n - 2 * i - 1
    shortcut = (
        (i >= 2 and p == 2 * n + 3)
        or (two_k >= 2 and two_k % 2 == 0 and is_irregular_pair(p, two_k, cache))
        or p == 2 ** (2 * n + 2 * i + 1) - 1
        or (p == 2 * n + 2 * i + 1 and fermat_quotient(p) % p == 0)
    )
    if shortcut or vp(cond, p) >= 1:
        return 2
    if p > 2 * n + 1:
        return 1
    return 0


def verify_thm_eecj(p: int, n: int, i: int, tier: int | None = None,
                    cache: BernoulliCache | None = None) -> Verdict:
    """sum(C(j+2i-1,j+1) (2^(j+2i)-1)/2^j C_j H^(j+2i)_{(p-1)/2} p^j) mod p^(2n+m)."""
    _require(p >= 3, "needs odd p")
    _require(n >= 1 and i >= 1, "needs n, i >= 1")
    half = (p - 1) // 2
    m = _eecj_tier(p, n, i, cache) if tier is None else tier
    lhs = sum(
        (binomial(j + 2 * i - 1, j + 1)
         * Fraction(2 ** (j + 2 * i) - 1, 2**j)
         * coeff_c(j, cache)
         * harmonic(j + 2 * i, half)
         * Fraction(p) ** j
         for j in range(2 * n)),
        Fraction(0),
    )
    v = vp(lhs, p)
    lower = tuple((mm, v >= 2 * n + mm) for mm in range(m + 1))
    return _verdict("thm-eecj", p, lhs, 2 * n + m, tier=m, lower=lower, n=n, i=i)


def verify_cor_eecjj(p: int, J: int, cache: BernoulliCache | None = None) -> Verdict:
    """The i=1 converging series truncated at j < J is divisible by p^J (odd p).

    One exception: the first omitted term carries B_{J+1}, whose denominator
    contains p exactly when J is odd and (p-1) | (J+1); the 2^(J+2)-1 factor
    protects B_{J+2} but not B_{J+1}, so that term only contributes p^(J-1)
    and the claimed exponent drops by one.
    """
    _require(p % 2 == 1 and p >= 3, "needs odd p")
    _require(J >= 1, "needs J >= 1")
    exponent = J - 1 if (J % 2 == 1 and (J + 1) % (p - 1) == 0) else J
    half = (p - 1) // 2
    lhs = sum(
        (coeff_c(j, cache)
         * (2 ** (j + 2) - 1)
         * harmonic(j + 2, half)
         * (Fraction(p, 2)) ** j
         for j in range(J)),
        Fraction(0),
    )
    return _verdict("cor-eecjj", p, lhs, exponent, J=J)


# -- the odd-order half-index results -----------------------------------------


def _q_powers_sum(q: int, p: int, n: int) -> Fraction:
    return sum(
        (Fraction((-1) ** j * q ** (j + 1), j + 1) * Fraction(p) ** j
         for j in range(n)),
        Fraction(0),
    )


def verify_prop41(p: int, n: int, cache: BernoulliCache | None = None) -> Verdict:
    """H_{(p-1)/2} plus the Fermat-quotient series and the Bernoulli tail,
    modulo p^n, for p > (n+1)/2."""
    _require(p % 2 == 1 and p >= 3, "needs odd p")
    _require(n >= 1, "needs n >= 1")
    _require(2 * p > n + 1, "needs p > (n+1)/2")
    q = fermat_quotient(p)
    lhs = harmonic(1, (p - 1) // 2) + 2 * _q_powers_sum(q, p, n)
    if p == n + 1:
        lhs += 2 * q * p ** (n - 1)
    for i in range(1, n // 2 + 1):  # 1 <= i < (n+1)/2
        lhs += (
            coeff_z(p, n, i, cache)
            * (2 ** (2 * i + 1) - 1)
            * Fraction(p, 2) ** (2 * i)
        )
    return _verdict("prop41", p, lhs, n, n=n)


def verify_prop42(p: int, n: int, h: int,
                  cache: BernoulliCache | None = None) -> Verdict:
    """H^(2h+1)_{(p-1)/2} against its Bernoulli expansion, modulo p^(n-1)."""
    _require(p % 2 == 1 and p >= 3, "needs odd p")
    _require(h >= 1, "needs h >= 1")
    _require(n + 1 > 2 * h, "needs (n+1)/2 > h")
    _require(2 * p > n + 1, "needs p > (n+1)/2")
    lhs = harmonic(2 * h + 1, (p - 1) // 2) + (2 ** (2 * h + 1) - 2) * coeff_z(
        p, n, h, cache
    )
    for i in range(1, (n - 1) // 2 + 1):
        lhs += (
            Fraction(p) ** (2 * i)
            * binomial(2 * i + 2 * h, 2 * i)
            * coeff_z(p, n, h + i, cache)
            * (2 ** (2 * h + 1) - Fraction(1, 2 ** (2 * i)))
        )
    return _verdict("prop42", p, lhs, n - 1, n=n, h=h)


def verify_thm_ee20(p: int, n: int, cache: BernoulliCache | None = None) -> Verdict:
    """The final theorem: the B/H series plus the q_p series, modulo p^n.

    The sum is well-defined for any odd p, so the p > (n+1)/2 hypothesis is
    deliberately not enforced here: evaluating just outside it is how the
    sharpness counterexample (p=3, n=5, valuation 4 < 5) is exhibited.
    Grid scans apply the hypothesis as a skip filter instead.
    """
    _require(p % 2 == 1 and p >= 3, "needs odd p")
    _require(n >= 1, "needs n >= 1")
    half = (p - 1) // 2
    q = fermat_quotient(p)
    lhs = sum(
        (Fraction(2 ** (j + 1) - 1, j + 1)
         * Fraction(2 ** (j + 2) - 1, j + 2)
         * bernoulli(j + 2, cache)
         * Fraction(2) ** (1 - j)
         * harmonic(j + 1, half)
         * Fraction(p) ** j
         for j in range(n)),
        Fraction(0),
    ) + _q_powers_sum(q, p, n)
    return _verdict("thm-ee20", p, lhs, n, n=n)


def verify_intermediate_47(p: int, n: int,
                           cache: BernoulliCache | None = None) -> Verdict:
    """The delta/Z/A bookkeeping congruence from the final proof (n even)."""
    _require(p % 2 == 1 and p >= 3, "needs odd p")
    _require(n >= 2 and n % 2 == 0, "needs even n >= 2")
    _require(2 * p > n + 1, "needs p > (n+1)/2")
    half = (p - 1) // 2
    q = fermat_quotient(p)
    delta = 1 if p == n + 1 else 0
    left = (
        2 * q * delta
        + p * coeff_z(p, n, n // 2, cache) * Fraction(2 ** (n + 1) - 1, 2**n)
    ) * Fraction(p) ** (n - 1)
    right = sum(
        ((2 ** (2 * h + 1) - 1)
         * Fraction(p, 2) ** (2 * h)
         * (coeff_a(h, cache) * harmonic(2 * h + 1, half) - coeff_z(p, n, h, cache))
         for h in range(1, (n - 2) // 2 + 1)),
        Fraction(0),
    )
    return _verdict("eq47", p, left - right, n, n=n)


def sun_congruence(p: int, cache: BernoulliCache | None = None) -> Verdict:
    """H_{(p-1)/2} + (7/12) B_{p-3} p^2 + 2(q - q^2 p/2 + q^3 p^2/3) mod p^3."""
    _require(p >= 5, "needs p >= 5")
    q = fermat_quotient(p)
    lhs = (
        harmonic(1, (p - 1) // 2)
        + Fraction(7, 12) * bernoulli(p - 3, cache) * p * p
        + 2 * (q - Fraction(q * q * p, 2) + Fraction(q**3 * p * p, 3))
    )
    return _verdict("sun", p, lhs, 3)

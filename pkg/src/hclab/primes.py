"""Prime iteration and classification, Fermat quotients, and the arithmetic
congruence lemmas (as opposed to the exact identities, which live in
bernoulli.py)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bernoulli import BernoulliCache, bernoulli
from .errors import HypothesisViolated
from .exact import PrimePower, vp, vp_int
from .harmonic import harmonic


def primes_in(lo: int, hi: int) -> list[int]:
    """All primes in [lo, hi], ascending, by sieve."""
    if hi < 2 or hi < lo:
        return []
    sieve = bytearray([1]) * (hi + 1)
    sieve[0:2] = b"\x00\x00"
    p = 2
    while p * p <= hi:
        if sieve[p]:
            sieve[p * p :: p] = b"\x00" * len(sieve[p * p :: p])
        p += 1
    return [n for n in range(max(lo, 2), hi + 1) if sieve[n]]


def fermat_quotient(p: int) -> int:
    """(2^(p-1) - 1) / p for odd prime p; exact division."""
    if p == 2:
        raise HypothesisViolated("base-2 Fermat quotient needs an odd prime")
    num = 2 ** (p - 1) - 1
    q, r = divmod(num, p)
    if r:
        raise HypothesisViolated(f"{p} does not divide 2^{p - 1} - 1; not prime?")
    return q


@dataclass(frozen=True)
class PrimeClass:
    p: int
    is_wieferich: bool
    is_mersenne: bool
    fermat_quotient: int


def classify(p: int) -> PrimeClass:
    """Wieferich / Mersenne classification of an odd prime."""
    q = fermat_quotient(p)
    succ = p + 1
    return PrimeClass(
        p=p,
        is_wieferich=q % p == 0,
        is_mersenne=succ & (succ - 1) == 0,
        fermat_quotient=q,
    )


def _falling(a: int, j: int) -> int:
    """a (a-1) ... (a-j+1); empty product is 1."""
    out = 1
    for t in range(j):
        out *= a - t
    return out


def _rising(a: int, j: int) -> int:
    """a (a+1) ... (a+j-1); empty product is 1."""
    out = 1
    for t in range(j):
        out *= a + t
    return out


def check_lemma_binom(p: int, n: int, i: int, j: int) -> bool:
    """j! C(p^(n-1)(p-1) - i, j) == (-1)^j j! C(i+j-1, j)  (mod p^(n-1)).

    Both sides evaluated through falling/rising factorials so i = 0 and
    j = 0 need no special casing.
    """
    big = p ** (n - 1) * (p - 1)
    if big - i < j:
        raise HypothesisViolated("binomial upper argument smaller than j")
    lhs = _falling(big - i, j)
    rhs = (-1) ** j * _rising(i, j)
    return (lhs - rhs) % p ** (n - 1) == 0


def check_lemma_pB(
    p: int, n: int, h: int, cache: BernoulliCache | None = None
) -> bool:
    """The two p*B congruences.

    p B_{p^(n-1)(p-1)} == p - 1 (mod p^n), and for h >= 1,
    p B_{p^(n-1)(p-1)-2h} == H^(2h)_{p-1} (mod p).
    """
    if p == 2:
        raise HypothesisViolated("odd prime required")
    big = p ** (n - 1) * (p - 1)
    ok = vp(p * bernoulli(big, cache) - (p - 1), p) >= n
    if h >= 1:
        if big - 2 * h < 2:
            raise HypothesisViolated("Bernoulli index below 2")
        lhs = p * bernoulli(big - 2 * h, cache) - harmonic(2 * h, p - 1)
        ok = ok and vp(lhs, p) >= 1
    return ok


def check_fermat_expansion(
    p: int, n: int, *, _q: int | None = None
) -> bool:
    """(2^(p^(n-1)(p-1)) - 1) / p^n against its mod-p^n series in p*q_p.

    The Kronecker-delta correction enters exactly when p = n + 1.

    The quotient is formed by exact integer division when 2^big fits in
    memory.  Past ~10^6 bits that is hopeless, so the residue of the
    quotient mod p^n is recovered from 2^big mod p^(2n) instead; the two
    routes agree wherever both apply since the quotient mod p^n only
    depends on 2^big mod p^(2n).
    """
    if 2 * p <= n + 1:
        raise HypothesisViolated(f"needs p > (n+1)/2, got p={p}, n={n}")
    q = fermat_quotient(p) if _q is None else _q
    big = p ** (n - 1) * (p - 1)
    if big <= 10**6:
        num = 2**big - 1
        quotient, r = divmod(num, p**n)
        if r:
            return False
    else:
        residue = pow(2, big, p ** (2 * n)) - 1
        quotient, r = divmod(residue, p**n)
        if r:
            return False
    rhs = sum(
        Fraction((-1) ** j * q ** (j + 1) * p**j, j + 1) for j in range(n)
    )
    if p == n + 1:
        rhs += q * p ** (n - 1)
    return vp(quotient - rhs, p) >= n

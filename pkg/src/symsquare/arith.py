"""Exact multiplicative-function and factorization primitives.

Everything here is deterministic integer arithmetic: trial-division
factorization backed by a cached prime sieve, squarefree parts,
the classical multiplicative functions, and Jacobi/Kronecker symbols.
All counting modules sit on top of these.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


class DomainError(ValueError):
    """Raised when an argument is outside an operation's stated domain."""


# ---------------------------------------------------------------------------
# Prime sieve (built once per size, then read-only)
# ---------------------------------------------------------------------------

_PRIME_CACHE: dict[str, object] = {"limit": 0, "primes": ()}


def primes_up_to(n: int) -> tuple[int, ...]:
    """All primes <= n, cached and grown geometrically on demand."""
    if n < 2:
        return ()
    if n > _PRIME_CACHE["limit"]:
        limit = max(n, 2 * _PRIME_CACHE["limit"], 1 << 10)
        sieve = np.ones(limit + 1, dtype=bool)
        sieve[:2] = False
        for p in range(2, math.isqrt(limit) + 1):
            if sieve[p]:
                sieve[p * p :: p] = False
        _PRIME_CACHE["primes"] = tuple(int(p) for p in np.nonzero(sieve)[0])
        _PRIME_CACHE["limit"] = limit
    primes = _PRIME_CACHE["primes"]
    # cached list may overshoot n
    hi = len(primes)
    lo = 0
    while lo < hi:
        mid = (lo + hi) // 2
        if primes[mid] <= n:
            lo = mid + 1
        else:
            hi = mid
    return primes[:lo]


@dataclass(frozen=True)
class Factorization:
    """Signed prime factorization: n == sign * prod(p**e)."""

    n: int
    factors: tuple[tuple[int, int], ...]
    sign: int

    def check(self) -> None:
        prod = self.sign
        last_p = 1
        for p, e in self.factors:
            if e < 1 or p <= last_p:
                raise AssertionError(f"bad factor list for {self.n}")
            last_p = p
            prod *= p**e
        if prod != self.n:
            raise AssertionError(f"factorization of {self.n} does not multiply back")


def factor(n: int) -> Factorization:
    """Factor a nonzero integer by trial division.

    The sieve grows to isqrt(|n|); every input in this package is at
    desk scale (|n| = O(B^2)), so this stays exact and fast.
    """
    if n == 0:
        raise DomainError("factor(0) is undefined")
    sign = -1 if n < 0 else 1
    m = abs(n)
    factors: list[tuple[int, int]] = []
    if m > 1:
        for p in primes_up_to(math.isqrt(m)):
            if p * p > m:
                break
            if m % p == 0:
                e = 0
                while m % p == 0:
                    m //= p
                    e += 1
                factors.append((p, e))
        if m > 1:
            factors.append((m, 1))  # remaining cofactor has no divisor <= sqrt
    return Factorization(n=n, factors=tuple(factors), sign=sign)


def squarefree_split(n: int) -> tuple[int, int]:
    """Split n = sqf * sq**2 with sqf squarefree and sign(sqf) = sign(n)."""
    if n == 0:
        raise DomainError("squarefree part of 0 is undefined")
    f = factor(n)
    sqf, sq = f.sign, 1
    for p, e in f.factors:
        if e % 2:
            sqf *= p
        sq *= p ** (e // 2)
    return sqf, sq


def is_squarefree(n: int) -> bool:
    if n == 0:
        return False
    return all(e == 1 for _, e in factor(n).factors)


def mobius(n: int) -> int:
    if n < 1:
        raise DomainError("mobius requires n >= 1")
    f = factor(n)
    if any(e > 1 for _, e in f.factors):
        return 0
    return -1 if len(f.factors) % 2 else 1


def euler_phi(n: int) -> int:
    if n < 1:
        raise DomainError("euler_phi requires n >= 1")
    out = 1
    for p, e in factor(n).factors:
        out *= (p - 1) * p ** (e - 1)
    return out


def omega(n: int) -> int:
    if n < 1:
        raise DomainError("omega requires n >= 1")
    return len(factor(n).factors)


def tau(n: int) -> int:
    if n < 1:
        raise DomainError("tau requires n >= 1")
    out = 1
    for _, e in factor(n).factors:
        out *= e + 1
    return out


def divisors(n: int) -> list[int]:
    """Sorted positive divisors of |n|, n != 0."""
    if n == 0:
        raise DomainError("divisors of 0 are undefined")
    out = [1]
    for p, e in factor(abs(n)).factors:
        out = [d * p**k for d in out for k in range(e + 1)]
    return sorted(out)


def tau_prime(n: int, limit: float) -> int:
    """Number of divisors d of n with both d <= limit and n/d <= limit."""
    if n < 1:
        raise DomainError("tau_prime requires n >= 1")
    return sum(1 for d in divisors(n) if d <= limit and n // d <= limit)


def is_perfect_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


# ---------------------------------------------------------------------------
# Quadratic residue symbols
# ---------------------------------------------------------------------------


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd n >= 1, by reciprocity reduction."""
    if n < 1 or n % 2 == 0:
        raise DomainError("jacobi symbol needs odd positive n")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n) for n >= 1 (Jacobi extended at the prime 2)."""
    if n < 1:
        raise DomainError("kronecker symbol needs n >= 1")
    e = 0
    while n % 2 == 0:
        n //= 2
        e += 1
    if e and a % 2 == 0:
        return 0
    out = 1
    if e % 2 and a % 8 in (3, 5):
        out = -1
    return out * jacobi(a, n)


# ---------------------------------------------------------------------------
# Bulk sieves (numpy, read-only once built) for the census engines
# ---------------------------------------------------------------------------


def mobius_sieve(n: int) -> np.ndarray:
    """mu(0..n) as int8 (mu(0) = 0)."""
    mu = np.ones(n + 1, dtype=np.int8)
    mu[0] = 0
    rem = np.arange(n + 1, dtype=np.int64)  # part not yet factored
    for p in primes_up_to(math.isqrt(n)):
        mu[p::p] *= -1
        mu[p * p :: p * p] = 0
        q = p
        while q <= n:
            rem[q::q] //= p
            q *= p
    # a leftover rem > 1 is a single prime factor > sqrt(n)
    mu[rem > 1] *= -1
    return mu


def phi_sieve(n: int) -> np.ndarray:
    """phi(0..n) as int64 (phi(0) = 0)."""
    phi = np.arange(n + 1, dtype=np.int64)
    for p in primes_up_to(n):
        if phi[p] == p:  # untouched, hence prime
            phi[p::p] -= phi[p::p] // p
    phi[0] = 0
    return phi


def squarefree_part_sieve(n: int) -> np.ndarray:
    """sqf(0..n) for nonnegative arguments, as int64 (index 0 is 0).

    Repeatedly divides out p^2 along arithmetic progressions; an entry
    with p-adic valuation v loses p^(2*floor(v/2)) in total, leaving the
    squarefree part.
    """
    arr = np.arange(n + 1, dtype=np.int64)
    for p in primes_up_to(math.isqrt(n)):
        p2 = p * p
        q = p2
        while q <= n:
            arr[q::q] //= p2
            q *= p2
    return arr


def squarefree_sieve(n: int) -> np.ndarray:
    """Boolean mask of squarefree integers in 0..n (0 marked False)."""
    sf = np.ones(n + 1, dtype=bool)
    sf[0] = False
    for p in primes_up_to(math.isqrt(n)):
        sf[p * p :: p * p] = False
    return sf

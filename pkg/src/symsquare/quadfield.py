"""Quadratic etale extensions of Q.

Fundamental discriminants, unit counts, class numbers via reduced binary
quadratic forms, truncated Dirichlet L(chi, 1) values with certified tail
bounds, counts of quadratic fields by discriminant, and the class number
formula cross-check L(chi_D, 1) = 2*pi*h(D) / (w(D) * sqrt(|D|)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from symsquare.arith import (
    DomainError,
    is_squarefree,
    kronecker,
    mobius_sieve,
    primes_up_to,
    squarefree_sieve,
)

# fundamental discriminants D != 1 counted by direct sieve enumeration
# up to this bound; beyond it an exact Mobius-floor count takes over
_DIRECT_ENUMERATION_LIMIT = 10_000_000


def fundamental_discriminant(m: int) -> int:
    """Discriminant of the ring of integers of Q(sqrt(m)), m squarefree.

    m = 1 encodes the split algebra Q + Q and maps to D = 1.
    """
    if m == 0 or not is_squarefree(m):
        raise DomainError(f"{m} is not a squarefree nonzero integer")
    if m == 1:
        return 1
    return m if m % 4 == 1 else 4 * m


def is_fundamental_discriminant(d: int) -> bool:
    if d == 0:
        return False
    if d % 4 == 1:
        return is_squarefree(d)
    if d % 4 == 0:
        m = d // 4
        return m % 4 in (2, 3) and is_squarefree(m)
    return False


def unit_count(d: int) -> int:
    """Order of the unit group of the quadratic order of discriminant d.

    Imaginary orders only; for d > 0 the convention here is the torsion
    count 2 (regulators are never needed for these heights).
    """
    if d == -4:
        return 4
    if d == -3:
        return 6
    return 2


@dataclass(frozen=True)
class QuadExt:
    """A degree-2 etale extension of Q keyed by its squarefree generator."""

    m: int  # squarefree; m = 1 is the split algebra Q + Q
    D: int  # fundamental discriminant (1 for the split algebra)
    w: int  # unit count of the order
    h: int | None = None  # class number, imaginary case only

    @classmethod
    def from_generator(cls, m: int) -> "QuadExt":
        d = fundamental_discriminant(m)
        h = class_number_imaginary(d) if d < 0 else None
        return cls(m=m, D=d, w=unit_count(d), h=h)


@lru_cache(maxsize=None)
def class_number_imaginary(d: int) -> int:
    """h(d) for fundamental d < 0, by counting reduced primitive forms.

    Reduced: |b| <= a <= c with b >= 0 whenever |b| = a or a = c.
    """
    if d >= 0 or not is_fundamental_discriminant(d):
        raise DomainError(f"{d} is not a fundamental discriminant < 0")
    count = 0
    for a in range(1, math.isqrt(-d // 3) + 1):
        for b in range(-a + 1, a + 1):
            num = b * b - d
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a:
                continue
            if b < 0 and (b == -a or a == c):
                continue  # canonical sign on the boundary
            if math.gcd(math.gcd(a, abs(b)), c) == 1:
                count += 1
    return count


def class_number_oracle(d: int) -> int:
    """Independent h(d): reduce every form in a box to canonical shape.

    Enumerates all primitive forms with a, |b| <= sqrt(|d|) and applies
    the classical reduction algorithm, counting distinct reduced forms.
    Slower than class_number_imaginary but shares no code path with it.
    """
    if d >= 0 or not is_fundamental_discriminant(d):
        raise DomainError(f"{d} is not a fundamental discriminant < 0")
    bound = math.isqrt(-d) + 1
    seen: set[tuple[int, int, int]] = set()
    for a in range(1, bound + 1):
        for b in range(-bound, bound + 1):
            num = b * b - d
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if math.gcd(math.gcd(a, abs(b)), c) != 1:
                continue
            seen.add(_reduce_form(a, b, c))
    return len(seen)


def _reduce_form(a: int, b: int, c: int) -> tuple[int, int, int]:
    """Canonical reduced representative of a positive definite form."""
    while True:
        if c < a:
            a, b, c = c, -b, a
            continue
        if b > a or b <= -a:
            # translate b into (-a, a]
            r = (a - b) // (2 * a)
            b2 = b + 2 * r * a
            c = a * r * r + b * r + c
            b = b2
            continue
        break
    if b < 0 and (b == -a or a == c):
        b = -b
    return a, b, c


class L1Result(NamedTuple):
    value: float
    tail_bound: float
    converged: bool


def _character_table(x: int, q: int) -> np.ndarray:
    """kronecker(x, n) for n = 0..q-1 (period q of the character).

    Filled by complete multiplicativity in the lower argument: seed the
    primes, then one pass of arithmetic-progression products.
    """
    vals = np.ones(q + 1, dtype=np.int8)
    vals[0] = 0
    for p in primes_up_to(q):
        vp = kronecker(x, p)
        pk = p
        while pk <= q:
            vals[pk::pk] *= vp
            pk *= p
    table = np.empty(q, dtype=np.int8)
    table[1:] = vals[1:q]
    table[0] = vals[q]  # residue 0 mod q
    return table


def character_period(x: int) -> int:
    """A period of n -> kronecker(x, n); 4|x| always works."""
    if x == 0:
        raise DomainError("character of 0 is not defined")
    return 4 * abs(x)


def dirichlet_L1(x: int, terms: int) -> L1Result:
    """Partial sum of L(chi_x, 1) = sum kronecker(x, n)/n over n <= terms.

    Sums whole character periods first (each full period of chi sums to
    zero for non-square x), so the reported tail bound C/(M+1), with C
    the exact maximal partial sum of chi over a period and M the number
    of terms actually summed, is honest by Abel summation.

    For perfect-square x the character is principal on a coprime
    progression and the series diverges: the partial sum is returned
    with converged=False and an infinite tail bound.
    """
    if terms < 1:
        raise DomainError("need at least one term")
    q = character_period(x)
    table = _character_table(x, q)
    square_x = x > 0 and math.isqrt(x) ** 2 == x
    if square_x:
        n = np.arange(1, terms + 1, dtype=np.float64)
        chi = table[np.arange(1, terms + 1) % q]
        return L1Result(float(np.sum(chi / n)), math.inf, False)
    blocks = max(terms // q, 1)
    m = blocks * q  # sum this many terms: an exact number of periods
    n = np.arange(1, m + 1, dtype=np.float64)
    chi = np.tile(np.roll(table, -1), blocks).astype(np.float64)  # chi(1..m)
    per_block = (chi / n).reshape(blocks, q).sum(axis=1)
    value = float(per_block[::-1].sum())  # small blocks first
    c_max = int(np.max(np.abs(np.cumsum(table[np.arange(1, q + 1) % q]))))
    return L1Result(value, c_max / (m + 1), True)


def count_quadratic_fields(bound) -> int:
    """Exact number of quadratic fields K with |disc(K)| <= bound.

    Both real and imaginary fields; the split algebra (D = 1) is not a
    field and is excluded. Accepts int, float or Fraction bounds; the
    comparison |D| <= bound is exact.
    """
    t = int(Fraction(bound))  # floor
    if t < 3:
        return 0
    t4 = int(Fraction(bound) / 4)
    if t <= _DIRECT_ENUMERATION_LIMIT:
        sf = squarefree_sieve(t)
        a1 = int(np.count_nonzero(sf[1::4]))
        a3 = int(np.count_nonzero(sf[3::4]))
        if t4 >= 1:
            sf4 = sf[: t4 + 1]
            b1 = int(np.count_nonzero(sf4[1::4]))
            b2 = int(np.count_nonzero(sf4[2::4]))
            b3 = int(np.count_nonzero(sf4[3::4]))
        else:
            b1 = b2 = b3 = 0
    else:
        a1, _, a3 = _squarefree_class_counts(t)
        b1, b2, b3 = _squarefree_class_counts(t4)
    # D = m:  m > 0, m = 1 mod 4 (minus the split algebra m = 1)
    #         m < 0, m = 1 mod 4  <=>  |m| = 3 mod 4
    # D = 4m: m > 0, m = 2,3 mod 4;  m < 0  <=>  |m| = 2,1 mod 4
    return (a1 - 1) + a3 + (b2 + b3) + (b2 + b1)


@lru_cache(maxsize=None)
def _squarefree_class_counts(x: int) -> tuple[int, int, int]:
    """#\\{m <= x squarefree, m = j mod 4\\} for j = 1, 2, 3 (exact).

    Mobius over square divisors d^2 (d odd; even d cannot divide a
    squarefree-candidate residue pattern the same way, so d even is
    folded in by counting k = m/d^2 in the right progression).
    """
    if x < 1:
        return 0, 0, 0
    root = math.isqrt(x)
    mu = mobius_sieve(root)
    d = np.arange(1, root + 1, dtype=np.int64)
    mud = mu[1:].astype(np.int64)
    keep = mud != 0
    d, mud = d[keep], mud[keep]
    q = x // (d * d)
    out = []
    for j in (1, 2, 3):
        d2mod = (d * d) % 4  # 1 for odd d, 0 for even d
        # count k <= q with k * d^2 = j mod 4
        cnt = np.zeros_like(q)
        odd = d2mod == 1
        cnt[odd] = np.where(q[odd] >= j, (q[odd] - j) // 4 + 1, 0)
        if j == 2:
            # even d: d^2 = 0 mod 4, k*d^2 = 0 mod 4 never equals 2
            pass
        # j = 1, 3 with even d: multiples of 4 never land there either
        out.append(int(np.sum(mud * cnt)))
    return out[0], out[1], out[2]


def class_number_formula_check(d: int, terms: int) -> tuple[float, float, float]:
    """Compare truncated L(chi_d, 1) with 2*pi*h / (w * sqrt(|d|))."""
    if d >= 0 or not is_fundamental_discriminant(d):
        raise DomainError(f"{d} is not a fundamental discriminant < 0")
    lhs = dirichlet_L1(d, terms).value
    h = class_number_imaginary(d)
    rhs = 2.0 * math.pi * h / (unit_count(d) * math.sqrt(-d))
    return lhs, rhs, abs(lhs - rhs)

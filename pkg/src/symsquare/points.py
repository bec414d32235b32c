"""Rational points of the symmetric square of P^1.

A point is diagonal (a rational point together with a degree-2 etale
algebra), split (an ordered pair of rational points), or non-split (a
quadratic algebraic number, stored as its integral minimal polynomial).
This module owns normalization, classification, the exponential stacky
height of each class, and exact integer comparisons of heights against
a rational cutoff (census counts must never depend on float rounding).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from symsquare.arith import DomainError, is_perfect_square, squarefree_split
from symsquare.quadfield import QuadExt, fundamental_discriminant


@dataclass(frozen=True)
class ProjRational:
    """A point of P^1(Q) in lowest terms: q > 0, or (p, q) = (1, 0)."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if (self.p, self.q) == (0, 0):
            raise DomainError("(0 : 0) is not a projective point")
        if math.gcd(self.p, self.q) != 1:
            raise DomainError(f"({self.p} : {self.q}) is not in lowest terms")
        if self.q < 0 or (self.q == 0 and self.p != 1):
            raise DomainError(f"({self.p} : {self.q}) is not sign-canonical")

    @classmethod
    def of(cls, p: int, q: int) -> "ProjRational":
        if (p, q) == (0, 0):
            raise DomainError("(0 : 0) is not a projective point")
        g = math.gcd(p, q)
        p, q = p // g, q // g
        if q < 0 or (q == 0 and p < 0):
            p, q = -p, -q
        return cls(p, q)

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"


def weil_height(r: ProjRational) -> int:
    """Exponential Weil height max(|p|, |q|)."""
    return max(abs(r.p), abs(r.q))


def h_abs(r: ProjRational) -> float:
    """Logarithmic Weil height."""
    return math.log(weil_height(r))


class RejectionReason(enum.Enum):
    NOT_QUADRATIC = "NotQuadratic"
    RATIONAL_ROOTS = "RationalRoots"
    REPEATED_ROOT = "RepeatedRoot"


class ClassificationError(DomainError):
    """Integer triple does not define a quadratic irrational."""

    def __init__(self, reason: RejectionReason, triple: tuple[int, int, int]):
        self.reason = reason
        self.triple = triple
        super().__init__(f"{reason.value}: {triple}")


@dataclass(frozen=True)
class MinPoly:
    """Primitive quadratic a x^2 + b x + c, a > 0, irrational roots."""

    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        if self.a <= 0:
            raise DomainError("leading coefficient must be positive")
        if math.gcd(math.gcd(self.a, self.b), self.c) != 1:
            raise DomainError("coefficients must be coprime")
        d = self.disc
        if d == 0 or is_perfect_square(d):
            raise DomainError("roots must be irrational")

    @property
    def disc(self) -> int:
        return self.b * self.b - 4 * self.a * self.c


def normalize(a: int, b: int, c: int) -> MinPoly:
    """Canonical minimal polynomial from a raw triple, or a rejection.

    Divides by the content, flips signs so the leading coefficient is
    positive, and rejects triples that do not define a quadratic
    irrational (NotQuadratic / RationalRoots / RepeatedRoot).
    """
    if (a, b, c) == (0, 0, 0):
        raise DomainError("zero triple")
    if a == 0:
        raise ClassificationError(RejectionReason.NOT_QUADRATIC, (a, b, c))
    g = math.gcd(math.gcd(abs(a), abs(b)), abs(c))
    a, b, c = a // g, b // g, c // g
    if a < 0:
        a, b, c = -a, -b, -c
    d = b * b - 4 * a * c
    if d == 0:
        raise ClassificationError(RejectionReason.REPEATED_ROOT, (a, b, c))
    if is_perfect_square(d):
        raise ClassificationError(RejectionReason.RATIONAL_ROOTS, (a, b, c))
    return MinPoly(a, b, c)


@dataclass(frozen=True)
class Diagonal:
    r: ProjRational
    K: QuadExt


@dataclass(frozen=True)
class Split:
    r: ProjRational
    s: ProjRational


@dataclass(frozen=True)
class NonSplit:
    f: MinPoly


StackPoint = Diagonal | Split | NonSplit


def mahler_measure(f: MinPoly) -> float:
    """M(f) = a * max(1, |root1|) * max(1, |root2|).

    For complex roots both moduli are sqrt(c/a), so M(f) = max(a, c).
    """
    d = f.disc
    if d < 0:
        return float(max(f.a, f.c))
    s = math.sqrt(d)
    r_big = (abs(f.b) + s) / (2 * f.a)
    r_small = abs(abs(f.b) - s) / (2 * f.a)
    return f.a * max(1.0, r_big) * max(1.0, r_small)


def field_discriminant(f: MinPoly) -> int:
    """Discriminant of the quadratic field generated by a root of f."""
    s, _ = squarefree_split(f.disc)
    return fundamental_discriminant(s)


def stacky_height(x: StackPoint) -> float:
    """Exponential height attached to the tangent bundle.

    Split (r, s):  H(r)^2 * H(s)^2
    Diagonal (r, K):  H(r)^4 * sqrt(|D_K|)
    Non-split f:  M(f)^2 * sqrt(|D_K(f)|)   (H(alpha)^2 = M(f) in degree 2)
    """
    if isinstance(x, Split):
        return float(weil_height(x.r) ** 2 * weil_height(x.s) ** 2)
    if isinstance(x, Diagonal):
        return weil_height(x.r) ** 4 * math.sqrt(abs(x.K.D))
    if isinstance(x, NonSplit):
        m = mahler_measure(x.f)
        return m * m * math.sqrt(abs(field_discriminant(x.f)))
    raise TypeError(f"not a stack point: {x!r}")


def proxy_height(a: int, b: int, c: int) -> float:
    """max(|a|,|b|,|c|)^2 * sqrt(|sqf(b^2 - 4ac)|) for a raw triple."""
    d = b * b - 4 * a * c
    if d == 0:
        raise ClassificationError(RejectionReason.REPEATED_ROOT, (a, b, c))
    if is_perfect_square(d):
        raise ClassificationError(RejectionReason.RATIONAL_ROOTS, (a, b, c))
    s, _ = squarefree_split(d)
    return max(abs(a), abs(b), abs(c)) ** 2 * math.sqrt(abs(s))


# ---------------------------------------------------------------------------
# Exact height comparisons (no float boundary dependence)
# ---------------------------------------------------------------------------


def _sign_u_plus_v_sqrt(u: Fraction, v: Fraction, d: int) -> int:
    """Sign of u + v*sqrt(d) for d > 0 not a perfect square."""
    if v == 0:
        return (u > 0) - (u < 0)
    if u == 0:
        return 1 if v > 0 else -1
    if u > 0 and v > 0:
        return 1
    if u < 0 and v < 0:
        return -1
    # opposite signs: compare u^2 with v^2 d; sqrt(d) irrational => no tie
    if u > 0:  # v < 0: positive iff u^2 > v^2 d
        return 1 if u * u > v * v * d else -1
    return 1 if v * v * d > u * u else -1


def proxy_height_le(a: int, b: int, c: int, bound: Fraction) -> bool:
    """Exact test max(|a|,|b|,|c|)^2 sqrt(|sqf(disc)|) <= bound."""
    d = b * b - 4 * a * c
    if d == 0 or is_perfect_square(d):
        raise ClassificationError(RejectionReason.RATIONAL_ROOTS, (a, b, c))
    s, _ = squarefree_split(d)
    m = max(abs(a), abs(b), abs(c))
    return (m * m) ** 2 * abs(s) <= bound * bound


def stacky_height_le(a: int, b: int, c: int, bound: Fraction) -> bool:
    """Exact test M(f)^2 sqrt(|D_K(f)|) <= bound for a primitive-or-not triple.

    Works on any triple with a > 0 and irrational roots; the height is
    scale-covariant so callers may pass unreduced triples. Complex-root
    and no-straddle real cases reduce to integer comparisons; when
    exactly one root lies outside the unit circle, M(f) = (t + sqrt(disc))/2
    with t = -b or t = +b, and the comparison M^4 |D| <= bound^2 expands to
    a sign test on an element of Z[sqrt(disc)].
    """
    if a <= 0:
        raise DomainError("leading coefficient must be positive")
    d = b * b - 4 * a * c
    if d == 0 or is_perfect_square(d):
        raise ClassificationError(RejectionReason.RATIONAL_ROOTS, (a, b, c))
    s, _ = squarefree_split(d)
    dk = abs(fundamental_discriminant(s))
    b2 = bound * bound
    if d < 0:
        m = max(a, c)  # both root moduli equal sqrt(c/a)
        return Fraction(m**4 * dk) <= b2
    f_plus = a + b + c  # sign of f at +1
    f_minus = a - b + c  # sign of f at -1; never 0: roots are irrational
    if f_plus < 0 and f_minus < 0:
        # +-1 both between the roots: both moduli > 1, M = |c|
        return Fraction(c**4 * dk) <= b2
    if f_plus > 0 and f_minus > 0:
        # roots on one side of each of +-1: inside the unit interval
        # unless the vertex -b/2a falls beyond it
        if -b > 2 * a or b > 2 * a:
            return Fraction(c**4 * dk) <= b2  # both outside, M = |c| = c
        return Fraction(a**4 * dk) <= b2  # both inside, M = a
    # straddle: M = (t + sqrt(d)) / 2 with t = -b (root > 1) or t = b
    t = -b if f_plus < 0 else b
    # M^4 = ((t^4 + 6 t^2 d + d^2) + (4 t^3 + 4 t d) sqrt(d)) / 16
    u1 = t**4 + 6 * t * t * d + d * d
    v1 = 4 * t**3 + 4 * t * d
    # want (u1 + v1 sqrt(d)) * dk <= 16 bound^2
    return _sign_u_plus_v_sqrt(16 * b2 - Fraction(u1 * dk), -Fraction(v1 * dk), d) >= 0


# ---------------------------------------------------------------------------
# Canonical one-line text serialization (CLI dump format)
# ---------------------------------------------------------------------------


def serialize_point(x: StackPoint) -> str:
    if isinstance(x, Diagonal):
        return f"D r={x.r} D={x.K.D}"
    if isinstance(x, Split):
        return f"S {x.r} {x.s}"
    if isinstance(x, NonSplit):
        return f"N {x.f.a} {x.f.b} {x.f.c}"
    raise TypeError(f"not a stack point: {x!r}")


def parse_point(line: str) -> StackPoint:
    parts = line.split()
    if parts[0] == "D" and len(parts) == 3:
        rp = parts[1].removeprefix("r=")
        p, q = rp.split("/")
        disc = int(parts[2].removeprefix("D="))
        m = disc if disc % 4 == 1 else disc // 4
        return Diagonal(ProjRational.of(int(p), int(q)), QuadExt.from_generator(m))
    if parts[0] == "S" and len(parts) == 3:
        p1, q1 = parts[1].split("/")
        p2, q2 = parts[2].split("/")
        return Split(ProjRational.of(int(p1), int(q1)), ProjRational.of(int(p2), int(q2)))
    if parts[0] == "N" and len(parts) == 4:
        return NonSplit(MinPoly(int(parts[1]), int(parts[2]), int(parts[3])))
    raise ValueError(f"unparseable point line: {line!r}")

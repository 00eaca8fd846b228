"""Lens spaces from unknot surgery, their classification, and Legendrian spines.

Orientation convention: -p/q surgery on the unknot gives L(p, q).  So
+p/q surgery gives L(p, -q) = -L(p, q).  Many texts use the opposite sign.

Curves on a boundary torus are written (m, l) = m*mu + l*lambda and the
intersection pairing is normalised by mu . lambda = +1.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import NamedTuple, Optional

from .legendrian import contact_to_topological
from .model import make_diagram


class LensError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class LensSpace:
    """L(p, q) with 0 <= q < p; L(1, 0) = S^3 and L(0, 1) = S^1 x S^2."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 0:
            raise LensError("p must be non-negative")
        if self.p == 0 and self.q != 1:
            raise LensError("S^1 x S^2 is written L(0, 1)")
        if self.p == 1 and self.q != 0:
            raise LensError("S^3 is written L(1, 0)")
        if self.p >= 2 and not (0 < self.q < self.p and gcd(self.p, self.q) == 1):
            raise LensError(f"L({self.p}, {self.q}) is not normalised")

    def __str__(self):
        if self.p == 1:
            return "S^3"
        if self.p == 0:
            return "S^1 x S^2"
        return f"L({self.p},{self.q})"


def lens_space(p: int, q: int) -> LensSpace:
    """Normalise (p, q) to a LensSpace; q is reduced mod p."""
    p = abs(int(p))
    if p == 0:
        if abs(q) != 1:
            raise LensError("L(0, q) requires q = +-1")
        return LensSpace(0, 1)
    if p == 1:
        return LensSpace(1, 0)
    if gcd(p, q) != 1:
        raise LensError(f"L({p}, {q}) needs gcd(p, q) = 1")
    return LensSpace(p, q % p)


def lens_from_unknot_surgery(coefficient) -> LensSpace:
    """The result of topological surgery on the unknot; None means infinity."""
    if coefficient is None:
        return LensSpace(1, 0)
    r = Fraction(coefficient)
    a, b = r.numerator, r.denominator
    if a == 0:
        return LensSpace(0, 1)
    # -p/q = a/b with p > 0  =>  p = |a|, q = -sign(a) * b
    return lens_space(abs(a), -b if a > 0 else b)


def lens_homeomorphic(a: LensSpace, b: LensSpace, orientation_preserving: bool = True) -> bool:
    """L(p, q) ~ L(p, q') iff q' = q^{+-1} (mod p), and also -q^{+-1} when orientation may reverse."""
    if a.p != b.p:
        return False
    if a.p <= 1:
        return True
    p = a.p
    inv = pow(a.q, -1, p)
    allowed = {a.q, inv}
    if not orientation_preserving:
        allowed |= {-a.q % p, -inv % p}
    return b.q in allowed


class SpineSwap(NamedTuple):
    or_preserving: bool
    or_reversing: bool


def spine_swap_symmetry(s: LensSpace) -> SpineSwap:
    """Whether some homeomorphism of L(p, q) exchanges the two Heegaard spines.

    Orientation-preserving iff q^2 = 1 (mod p); reversing iff q^2 = -1 (mod p).
    """
    if s.p < 2:
        raise LensError("spine swap is only defined for p >= 2")
    sq = s.q * s.q % s.p
    return SpineSwap(sq == 1 % s.p, sq == -1 % s.p)


def intersection_pairing(u, v) -> int:
    """(m1, l1) . (m2, l2) = m1*l2 - l1*m2, so that mu . lambda = 1."""
    return u[0] * v[1] - u[1] * v[0]


@dataclass(frozen=True)
class GluingMap:
    """Boundary identification: mu_1 -> mu_image, lambda_1 -> lambda_image in (mu_2, lambda_2) coordinates."""

    mu_image: tuple[int, int]
    lambda_image: tuple[int, int]

    def __post_init__(self):
        if abs(self.determinant) != 1:
            raise LensError(f"gluing has determinant {self.determinant}, not +-1")

    @property
    def matrix(self) -> tuple[tuple[int, int], tuple[int, int]]:
        """Columns are the images of mu_1 and lambda_1."""
        (a, b), (c, d) = self.mu_image, self.lambda_image
        return (a, c), (b, d)

    @property
    def determinant(self) -> int:
        (a, b), (c, d) = self.mu_image, self.lambda_image
        return a * d - b * c

    def __call__(self, curve) -> tuple[int, int]:
        m, l = curve
        return (m * self.mu_image[0] + l * self.lambda_image[0],
                m * self.mu_image[1] + l * self.lambda_image[1])

    def inverse(self) -> "GluingMap":
        (a, b), (c, d) = self.mu_image, self.lambda_image
        e = self.determinant
        return GluingMap((d * e, -b * e), (-c * e, a * e))

    def qrs(self) -> tuple[int, int, int, int]:
        """(p, q, r, s) with mu_1 -> -q mu_2 + p lambda_2 and lambda_1 -> r mu_2 + s lambda_2."""
        return self.mu_image[1], -self.mu_image[0], self.lambda_image[0], self.lambda_image[1]

    def lens(self) -> LensSpace:
        p, q, _, _ = self.qrs()
        return lens_space(p, q)


def check_contact_longitudes(g: GluingMap, tb1: int, tb2: int) -> None:
    """Raise unless g carries lambda_1 + tb1 mu_1 to +-(lambda_2 + tb2 mu_2)."""
    image = g((tb1, 1))
    if image not in {(tb2, 1), (-tb2, -1)}:
        raise LensError(f"gluing sends the contact longitude ({tb1}, 1) to {image}, not +-({tb2}, 1)")


def rational_tb_of_spine(contact_longitude, seifert_longitude) -> Fraction:
    """tb_Q = (contact longitude . r) / k, where r is the rational Seifert longitude, k = mu . r."""
    k = intersection_pairing((1, 0), seifert_longitude)
    if k == 0:
        raise LensError("the spine has infinite order; no rational tb")
    if k < 0:
        seifert_longitude = (-seifert_longitude[0], -seifert_longitude[1])
        k = -k
    return Fraction(intersection_pairing(contact_longitude, seifert_longitude), k)


@dataclass(frozen=True)
class GluedNeighborhoods:
    lens: LensSpace
    gluing: GluingMap
    q: int
    r: int
    s: int
    tbq_spine1: Fraction
    tbq_spine2: Fraction


def glue_standard_neighborhoods(tb_n: int, p: int) -> GluedNeighborhoods:
    """Glue two standard neighbourhoods of tb = n Legendrian knots into L(p, p-1).

    Uses mu_1 -> (1 + pn) mu_2 + p lambda_2, lambda_1 -> -pn^2 mu_2 + (1 - pn) lambda_2,
    which matches contact longitudes, and returns the rational tb of both spines.
    """
    if p < 2:
        raise LensError("p must be at least 2")
    n = tb_n
    g = GluingMap((1 + p * n, p), (-p * n * n, 1 - p * n))
    check_contact_longitudes(g, n, n)
    _, q, r, s = g.qrs()
    # The meridian of the other solid torus bounds there, so its image is a
    # rational Seifert longitude of this spine.
    tb2 = rational_tb_of_spine((n, 1), g((1, 0)))
    tb1 = rational_tb_of_spine((n, 1), g.inverse()((1, 0)))
    return GluedNeighborhoods(g.lens(), g, q, r, s, tb1, tb2)


@dataclass(frozen=True)
class CosmeticPair:
    topological: tuple[Fraction, Fraction]
    lens: tuple[LensSpace, LensSpace]
    oriented_homeomorphic: bool
    homeomorphic: bool

    @property
    def same_slope(self) -> bool:
        return self.topological[0] == self.topological[1]


def cosmetic_pair_check(c1, c2, tb: int) -> CosmeticPair:
    """Compare contact surgeries with coefficients c1, c2 on a Legendrian unknot of the given tb."""
    r1, r2 = contact_to_topological(c1, tb), contact_to_topological(c2, tb)
    l1, l2 = lens_from_unknot_surgery(r1), lens_from_unknot_surgery(r2)
    return CosmeticPair((r1, r2), (l1, l2), lens_homeomorphic(l1, l2, True), lens_homeomorphic(l1, l2, False))


def unknot_surgery_diagram(coefficient, tb: Optional[int] = None):
    """One-component diagram for surgery on the unknot with the given topological coefficient."""
    return make_diagram([None if coefficient is None else Fraction(coefficient)], [[0]],
                        tbs=None if tb is None else [tb], unknots=True)

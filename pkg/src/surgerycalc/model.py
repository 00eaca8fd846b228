"""Surgery diagrams in S^3: slopes, Legendrian decorations, auxiliary knots.

Conventions used throughout the package:

* A slope p*mu + q*lambda is stored normalised, gcd(p, q) = 1 and q >= 0;
  the meridian (coefficient infinity) is (1, 0).
* Slopes are *topological*, i.e. measured against the Seifert (surface)
  longitude.  Contact coefficients are a derived view: top = contact + tb.
* The linking matrix is taken as given input.  Its diagonal is forced to
  zero; framings live only in the slopes.  All results are relative to the
  sign convention of the supplied linking numbers.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

from .linalg import IntMatrix


class DiagramError(ValueError):
    """A diagram, slope or decoration violates its invariants."""


@dataclass(frozen=True, order=True)
class Slope:
    p: int
    q: int

    def __post_init__(self):
        if (self.p, self.q) == (0, 0):
            raise DiagramError("slope (0, 0) is not a curve")
        if gcd(self.p, self.q) != 1:
            raise DiagramError(f"slope ({self.p}, {self.q}) is not coprime")
        if self.q < 0 or (self.q == 0 and self.p != 1):
            raise DiagramError(f"slope ({self.p}, {self.q}) is not normalised; use normalize_slope")

    @property
    def is_meridian(self) -> bool:
        return self.q == 0

    def coefficient(self) -> Optional[Fraction]:
        """p/q as a Fraction, or None for the meridian (infinity)."""
        return None if self.q == 0 else Fraction(self.p, self.q)

    @classmethod
    def from_coefficient(cls, r) -> "Slope":
        if r is None:
            return MERIDIAN
        r = Fraction(r)
        return cls(r.numerator, r.denominator)

    def __str__(self):
        if self.q == 0:
            return "inf"
        return str(self.p) if self.q == 1 else f"{self.p}/{self.q}"


def normalize_slope(p: int, q: int) -> Slope:
    """Reduce (p, q) to the canonical representative with q >= 0."""
    p, q = int(p), int(q)
    if p == 0 and q == 0:
        raise DiagramError("slope (0, 0) is not a curve")
    g = gcd(p, q)
    p, q = p // g, q // g
    if q < 0 or (q == 0 and p < 0):
        p, q = -p, -q
    return Slope(p, q)


MERIDIAN = Slope(1, 0)


@dataclass(frozen=True)
class LegendrianData:
    tb: int
    rot: Optional[int] = None


@dataclass(frozen=True)
class LinkComponent:
    id: str
    slope: Slope
    legendrian: Optional[LegendrianData] = None
    unknot: bool = False

    @property
    def tb(self) -> Optional[int]:
        return None if self.legendrian is None else self.legendrian.tb

    def contact_coefficient(self) -> Optional[Fraction]:
        """Contact surgery coefficient, when a tb decoration exists.

        Returns None if the component is undecorated or has meridional slope
        (the contact coefficient is then infinite as well).
        """
        if self.legendrian is None or self.slope.is_meridian:
            return None
        return self.slope.coefficient() - self.legendrian.tb


@dataclass(frozen=True)
class SurgeryDiagram:
    components: tuple[LinkComponent, ...] = ()
    linking: IntMatrix = field(default_factory=lambda: IntMatrix.zeros(0, 0))

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        if not isinstance(self.linking, IntMatrix):
            object.__setattr__(self, "linking", IntMatrix.from_rows(self.linking, len(self.components)))

    @property
    def n(self) -> int:
        return len(self.components)

    @property
    def slopes(self) -> tuple[Slope, ...]:
        return tuple(c.slope for c in self.components)

    def lk(self, i: int, j: int) -> int:
        return self.linking[i, j]

    def index(self, key) -> int:
        """Resolve a component by position or by id."""
        if isinstance(key, int):
            if not 0 <= key < self.n:
                raise DiagramError(f"component index {key} out of range for {self.n} components")
            return key
        for i, c in enumerate(self.components):
            if c.id == key:
                return i
        raise DiagramError(f"no component with id {key!r}")


@dataclass(frozen=True)
class AuxKnot:
    """An oriented (Legendrian) knot L0 in the exterior of the surgery link."""

    tb_old: int
    linking: tuple[int, ...]
    rot_old: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "linking", tuple(int(x) for x in self.linking))


def validate_diagram(d: SurgeryDiagram, aux: Optional[AuxKnot] = None) -> SurgeryDiagram:
    """Check all diagram invariants and return the diagram unchanged.

    Raises DiagramError describing the first violation found.
    """
    n = d.n
    if d.linking.shape != (n, n):
        raise DiagramError(f"linking matrix has shape {d.linking.shape}, expected ({n}, {n})")
    for i in range(n):
        if d.linking[i, i] != 0:
            raise DiagramError(f"linking matrix diagonal entry {i} must be 0 (framings live in slopes)")
        for j in range(i):
            if d.linking[i, j] != d.linking[j, i]:
                raise DiagramError(f"asymmetric linking: l[{i}][{j}]={d.linking[i, j]} but l[{j}][{i}]={d.linking[j, i]}")
    ids = [c.id for c in d.components]
    if len(set(ids)) != len(ids):
        raise DiagramError("component ids are not unique")
    for c in d.components:
        if not isinstance(c.slope, Slope):
            raise DiagramError(f"component {c.id}: slope is not a Slope")
        if c.unknot and c.legendrian is not None and c.legendrian.tb > -1:
            raise DiagramError(f"component {c.id}: a Legendrian unknot has tb <= -1, got {c.legendrian.tb}")
    if aux is not None and len(aux.linking) != n:
        raise DiagramError(f"aux linking vector has length {len(aux.linking)}, diagram has {n} components")
    return d


def make_diagram(slopes: Sequence, linking: Sequence[Sequence[int]] = (), tbs: Optional[Sequence] = None,
                 unknots=False, ids: Optional[Sequence[str]] = None) -> SurgeryDiagram:
    """Convenience constructor from plain Python data.

    ``slopes`` items may be (p, q) pairs, ints, Fractions or None (meridian).
    """
    comps = []
    n = len(slopes)
    for i, s in enumerate(slopes):
        if isinstance(s, Slope):
            slope = s
        elif isinstance(s, tuple):
            slope = normalize_slope(*s)
        else:
            slope = Slope.from_coefficient(s)
        tb = None if tbs is None else tbs[i]
        leg = None if tb is None else LegendrianData(int(tb))
        flag = unknots[i] if isinstance(unknots, (list, tuple)) else bool(unknots)
        comps.append(LinkComponent(ids[i] if ids else f"L{i + 1}", slope, leg, flag))
    lk = IntMatrix.from_rows(linking, n) if n else IntMatrix.zeros(0, 0)
    return validate_diagram(SurgeryDiagram(tuple(comps), lk))


def with_component(d: SurgeryDiagram, i: int, **changes) -> SurgeryDiagram:
    comps = list(d.components)
    comps[i] = replace(comps[i], **changes)
    return replace(d, components=tuple(comps))

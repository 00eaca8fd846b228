"""Rolfsen twists on surgery diagrams, at the level of slopes, linking and tb.

A twist of n full turns along the disk bounded by an unknotted component
U_i changes the diagram as follows (l_ij are linking numbers):

    slope of U_i        (p, q) -> (p, q + n p)
    slope of L_j        r_j -> r_j + n l_ij^2
    linking             l_jk -> l_jk + n l_ij l_ik         (j, k != i)
    tb of L_j           tb_j -> tb_j + n l_ij^2

The aux knot L0 is treated like any other strand.  Rotation numbers and
knot-type labels of the twisted strands cannot be tracked algebraically and
are cleared.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional

from .linalg import IntMatrix
from .model import AuxKnot, DiagramError, LegendrianData, SurgeryDiagram, normalize_slope


class MoveError(DiagramError):
    pass


@dataclass(frozen=True)
class TwistSpec:
    component: int
    twists: int

    def check(self, d: SurgeryDiagram) -> "TwistSpec":
        i = d.index(self.component)
        if self.twists == 0:
            raise MoveError("twist count must be nonzero")
        if not d.components[i].unknot:
            raise MoveError(f"component {d.components[i].id} is not flagged as an unknot; cannot twist along it")
        return TwistSpec(i, self.twists)


def rolfsen_twist(d: SurgeryDiagram, aux: Optional[AuxKnot], component, twists: int):
    """Apply ``twists`` full Rolfsen twists along an unknotted component.

    Returns the new (diagram, aux).  The twisted component keeps its unknot
    flag but loses any Legendrian decoration, since its new coefficient is
    no longer tied to a contact framing.
    """
    spec = TwistSpec(component, twists).check(d)
    i, n = spec.component, spec.twists
    lk = d.linking
    comps = []
    for j, c in enumerate(d.components):
        if j == i:
            s = c.slope
            comps.append(replace(c, slope=normalize_slope(s.p, s.q + n * s.p), legendrian=None))
            continue
        shift = n * lk[i, j] ** 2
        s = c.slope
        slope = normalize_slope(s.p + shift * s.q, s.q)
        leg = None if c.legendrian is None else LegendrianData(c.legendrian.tb + shift)
        comps.append(replace(c, slope=slope, legendrian=leg, unknot=False))
    m = d.n
    new_lk = [[0 if j == k else lk[j, k] + (0 if i in (j, k) else n * lk[i, j] * lk[i, k])
               for k in range(m)] for j in range(m)]
    out = replace(d, components=tuple(comps), linking=IntMatrix.from_rows(new_lk, m))
    new_aux = None
    if aux is not None:
        if len(aux.linking) != m:
            raise DiagramError(f"aux linking vector has length {len(aux.linking)}, diagram has {m} components")
        l0 = aux.linking
        new_aux = AuxKnot(aux.tb_old + n * l0[i] ** 2,
                          tuple(l0[j] + (0 if j == i else n * lk[i, j] * l0[i]) for j in range(m)))
    return out, new_aux


def delete_trivial(d: SurgeryDiagram, aux: Optional[AuxKnot], component):
    """Drop a component with meridional slope (a trivial surgery)."""
    i = d.index(component)
    if not d.components[i].slope.is_meridian:
        raise MoveError(f"component {d.components[i].id} has slope {d.components[i].slope}, not the meridian")
    keep = [j for j in range(d.n) if j != i]
    lk = IntMatrix.from_rows([[d.linking[a, b] for b in keep] for a in keep], len(keep))
    out = replace(d, components=tuple(d.components[j] for j in keep), linking=lk)
    new_aux = None if aux is None else replace(aux, linking=tuple(aux.linking[j] for j in keep))
    return out, new_aux


def contact_rolfsen(d: SurgeryDiagram, aux: Optional[AuxKnot], component):
    """Remove a tb=-1 unknot with contact coefficient 1 + 1/n.

    Its topological coefficient is 1/n; it is twisted away by -n Rolfsen
    twists and then deleted.  Strands linking it once lose (n = 1) or gain
    (n = -1) one unit of tb.
    """
    i = d.index(component)
    c = d.components[i]
    if not c.unknot:
        raise MoveError(f"component {c.id} is not flagged as an unknot")
    if c.legendrian is None or c.legendrian.tb != -1:
        raise MoveError(f"component {c.id} must be a Legendrian unknot with tb = -1")
    s = c.slope
    if abs(s.p) != 1 or s.q == 0:
        raise MoveError(f"component {c.id} has contact coefficient {c.contact_coefficient()}, "
                        "not of the form 1 + 1/n with n != 0")
    n = s.p * s.q
    d2, aux2 = rolfsen_twist(d, aux, i, -n)
    return delete_trivial(d2, aux2, i)

"""Thurston-Bennequin bookkeeping for Legendrian knots in surgered manifolds.

If L0 is (rationally) nullhomologous after surgery, with k*l = Q*a, its new
(rational) tb is

    tb_new = tb_old - <a, (q_1 l_10, ..., q_n l_n0)> / k.

The correction term does not depend on which witness a is used.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .homology import nullhomology
from .model import AuxKnot, SurgeryDiagram, make_diagram


class NotApplicable(Exception):
    """A well-posed question whose answer is negative (not an input error)."""


class NotNullhomologous(NotApplicable):
    def __init__(self, order: Optional[int]):
        self.order = order
        what = "has infinite order" if order is None else f"has order {order}"
        super().__init__(f"aux knot is not nullhomologous after surgery: its class {what}")


class InfiniteOrder(NotApplicable):
    def __init__(self):
        super().__init__("aux knot is not rationally nullhomologous: its homology class has infinite order")


class NoBoundAvailable(NotApplicable):
    pass


def contact_to_topological(c, tb: int) -> Fraction:
    return Fraction(c) + tb


def topological_to_contact(r, tb: int) -> Fraction:
    return Fraction(r) - tb


@dataclass(frozen=True)
class TbResult:
    """value == tb_old - correction / order."""

    value: Fraction
    order: int
    correction: int
    tb_old: int
    witness: tuple[int, ...]

    @property
    def is_integral(self) -> bool:
        return self.value.denominator == 1


def framing_correction(d: SurgeryDiagram, aux: AuxKnot, a) -> int:
    """<a, (q_i l_i0)_i>, the shift of L0's surface longitude times k."""
    return sum(ai * s.q * l for ai, s, l in zip(a, d.slopes, aux.linking))


def tbq_after_surgery(d: SurgeryDiagram, aux: AuxKnot) -> TbResult:
    cert = nullhomology(d, aux)
    if cert is None:
        raise InfiniteOrder()
    f = framing_correction(d, aux, cert.witness)
    return TbResult(aux.tb_old - Fraction(f, cert.order), cert.order, f, aux.tb_old, cert.witness)


def tb_after_surgery(d: SurgeryDiagram, aux: AuxKnot) -> TbResult:
    cert = nullhomology(d, aux)
    if cert is None or cert.order != 1:
        raise NotNullhomologous(None if cert is None else cert.order)
    return tbq_after_surgery(d, aux)


@dataclass(frozen=True)
class ObstructionVerdict:
    violated: bool
    witness_bound: Fraction
    computed_tb: Fraction


def bennequin_check(tb, rot: Optional[int] = None, max_tb_bound=None,
                    euler_characteristic: Optional[int] = None) -> ObstructionVerdict:
    """Compare tb with the tight-structure bound.

    Either pass the maximal tb for the knot type, or an Euler characteristic
    chi of a Seifert surface, in which case tb + |rot| <= -chi is tested.
    """
    tb = Fraction(tb)
    if euler_characteristic is not None:
        bound = Fraction(-euler_characteristic - abs(rot or 0))
    elif max_tb_bound is not None:
        bound = Fraction(max_tb_bound)
    else:
        raise ValueError("need max_tb_bound or euler_characteristic")
    return ObstructionVerdict(tb > bound, bound, tb)


_NEG_TORUS = re.compile(r"negative-torus\(\s*2\s*,\s*(\d+)\s*\)$")


def _unknot_bound(label: str) -> Optional[Fraction]:
    return Fraction(-1) if label == "unknot" else None


def _negative_torus_bound(label: str) -> Optional[Fraction]:
    m = _NEG_TORUS.match(label)
    if not m:
        return None
    odd = int(m.group(1))
    if odd < 3 or odd % 2 == 0:
        return None
    n = (odd - 1) // 2
    return Fraction(-2 - 4 * n)


# Extend by appending callables label -> bound or None.  Only knot types whose
# maximal tb is actually known belong here.
MAX_TB_TABLE: list[Callable[[str], Optional[Fraction]]] = [_unknot_bound, _negative_torus_bound]


def max_tb_bound(knot_type: str) -> Fraction:
    label = knot_type.strip().lower()
    for rule in MAX_TB_TABLE:
        bound = rule(label)
        if bound is not None:
            return bound
    raise NoBoundAvailable(f"no maximal tb bound available for knot type {knot_type!r}")


def negative_torus_label(n: int) -> str:
    return f"negative-torus(2,{2 * n + 1})"


@dataclass(frozen=True)
class ScanRow:
    n: int
    aux_linking: int
    tb_new: Fraction
    knot_type: str
    bound: Fraction
    violated: bool


def surgery_theorem_row(n: int) -> ScanRow:
    """1/n surgery on a tb=-1 unknot with a tb=-1 unknot L0 linking it once (n<0) or twice (n>0).

    After the surgery L0 is an unknot (n<0) or a negative (2, 2n+1) torus
    knot (n>0); these knot types are asserted, not computed.
    """
    if n == 0:
        raise ValueError("n = 0 is 0-surgery (S^1 x S^2), not a 1/n surgery")
    lk = 1 if n < 0 else 2
    d = make_diagram([(1, n)], [[0]], unknots=True)
    res = tb_after_surgery(d, AuxKnot(-1, (lk,)))
    label = "unknot" if n < 0 else negative_torus_label(n)
    verdict = bennequin_check(res.value, max_tb_bound=max_tb_bound(label))
    return ScanRow(n, lk, res.value, label, verdict.witness_bound, verdict.violated)


def surgery_theorem_scan(n_from: int, n_to: int) -> list[ScanRow]:
    """Rows for every nonzero n in the closed interval, ordered by n."""
    if n_from > n_to:
        raise ValueError(f"empty range [{n_from}, {n_to}]")
    rows = [surgery_theorem_row(n) for n in range(n_from, n_to + 1) if n != 0]
    if not rows:
        raise ValueError("range contains no nonzero n")
    return rows

"""First homology of surgered manifolds and homology classes of knots in them.

For a link L_1..L_n in S^3 with topological slopes p_i/q_i, H_1 of the
surgered manifold is generated by the meridians mu_i subject to

    p_i mu_i + q_i * sum_{j != i} l_ij mu_j = 0.

Column i of ``build_q`` is exactly relation i written in the mu basis, so
H_1 = coker(Q).  A knot L0 in the link exterior represents sum l_i0 mu_i.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .linalg import IntMatrix, DimensionError, cokernel_order, invariant_factors, smith_normal_form, solve_diophantine
from .model import AuxKnot, SurgeryDiagram


@dataclass(frozen=True)
class AbelianGroup:
    """Finitely generated abelian group Z^free_rank + sum Z/d_i, d_i | d_{i+1}."""

    torsion: tuple[int, ...] = ()
    free_rank: int = 0

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(self.torsion))
        if any(d < 2 for d in self.torsion):
            raise ValueError("torsion coefficients must be >= 2")
        if any(b % a for a, b in zip(self.torsion, self.torsion[1:])):
            raise ValueError("torsion coefficients must form a divisibility chain")
        if self.free_rank < 0:
            raise ValueError("negative free rank")

    @property
    def is_trivial(self) -> bool:
        return not self.torsion and self.free_rank == 0

    @property
    def order(self) -> Optional[int]:
        """Group order, None if infinite."""
        if self.free_rank:
            return None
        out = 1
        for d in self.torsion:
            out *= d
        return out

    def __str__(self):
        parts = ["Z"] * self.free_rank + [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class NullhomologyCertificate:
    """k [L0] = 0, witnessed by Q a = k l; k == 1 means nullhomologous."""

    order: int
    witness: tuple[int, ...]
    kernel: tuple[tuple[int, ...], ...]

    @property
    def nullhomologous(self) -> bool:
        return self.order == 1


def relation_matrix(slopes: Sequence[tuple[int, int]], linking: IntMatrix) -> IntMatrix:
    """Q for raw (p, q) pairs; signs are not normalised here."""
    n = len(slopes)
    rows = [[slopes[i][0] if i == j else slopes[j][1] * linking[i, j] for j in range(n)] for i in range(n)]
    return IntMatrix.from_rows(rows, n)


def build_q(d: SurgeryDiagram) -> IntMatrix:
    """Generalised linking matrix: Q_ii = p_i, Q_ij = q_j * l_ij."""
    return relation_matrix([(s.p, s.q) for s in d.slopes], d.linking)


def cokernel(A: IntMatrix) -> AbelianGroup:
    torsion, free = invariant_factors(smith_normal_form(A).diagonal, A.rows)
    return AbelianGroup(tuple(torsion), free)


def first_homology(d: SurgeryDiagram) -> AbelianGroup:
    return cokernel(build_q(d))


def _check_aux(d: SurgeryDiagram, aux: AuxKnot):
    if len(aux.linking) != d.n:
        raise DimensionError(f"aux linking vector has length {len(aux.linking)}, diagram has {d.n} components")


def nullhomology(d: SurgeryDiagram, aux: AuxKnot) -> Optional[NullhomologyCertificate]:
    """Order of [L0] in H_1 with a witness, or None if [L0] has infinite order."""
    _check_aux(d, aux)
    Q = build_q(d)
    snf = smith_normal_form(Q)
    k = cokernel_order(Q, aux.linking, snf)
    if k is None:
        return None
    sol = solve_diophantine(Q, [k * x for x in aux.linking], snf)
    assert sol is not None
    return NullhomologyCertificate(k, sol.solution, sol.kernel)


def exterior_relation_matrix(d: SurgeryDiagram, aux: AuxKnot) -> IntMatrix:
    """Relations of H_1(M - L0) on generators mu_0, ..., mu_n (one column per relation)."""
    _check_aux(d, aux)
    Q = build_q(d)
    top = [s.q * l for s, l in zip(d.slopes, aux.linking)]
    return IntMatrix.from_rows([top] + Q.tolist(), d.n)


def exterior_homology(d: SurgeryDiagram, aux: AuxKnot) -> AbelianGroup:
    return cokernel(exterior_relation_matrix(d, aux))

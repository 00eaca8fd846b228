import random

import pytest
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors as sympy_invariant_factors

from surgerycalc.homology import (AbelianGroup, build_q, cokernel, exterior_homology, exterior_relation_matrix,
                                  first_homology, nullhomology, relation_matrix)
from surgerycalc.linalg import DimensionError, cokernel_order
from surgerycalc.model import AuxKnot, SurgeryDiagram, make_diagram

from oracles import det_fraction, matvec, random_coprime_pair, random_symmetric, rank_q, solve_q_square


def test_build_q_single():
    assert build_q(make_diagram([(-5, 2)], [[0]])).tolist() == [[-5]]


def test_build_q_paper_two_component():
    d = make_diagram([(1, 2), (2, 1)], [[0, 1], [1, 0]])
    assert build_q(d).tolist() == [[1, 1], [2, 2]]


def test_build_q_integral_is_linking_matrix():
    d = make_diagram([3, -2, 0], [[0, 1, -2], [1, 0, 4], [-2, 4, 0]])
    assert build_q(d).tolist() == [[3, 1, -2], [1, -2, 4], [-2, 4, 0]]


@pytest.mark.parametrize("p, q", [(2, 1), (3, 5), (5, -7), (7, 5), (12, 5), (12, -7), (-9, 4)])
def test_unknot_lens_homology(p, q):
    p = abs(p)
    assert first_homology(make_diagram([(p, q)], [[0]])) == AbelianGroup((p,), 0)


def test_trivial_cases():
    assert first_homology(SurgeryDiagram()).is_trivial
    assert first_homology(make_diagram([0], [[0]])) == AbelianGroup((), 1)
    assert first_homology(make_diagram([(1, 4)], [[0]])).is_trivial


def test_abelian_group_canonical():
    with pytest.raises(ValueError):
        AbelianGroup((1, 2))
    with pytest.raises(ValueError):
        AbelianGroup((2, 3))
    assert str(AbelianGroup((2, 6), 1)) == "Z + Z/2 + Z/6"
    assert AbelianGroup((2, 6)).order == 12


def test_nullhomology_examples():
    for n in (1, 3):
        cert = nullhomology(make_diagram([(1, n)], [[0]]), AuxKnot(-1, (1,)))
        assert cert.order == 1 and cert.witness == (1,)
    # 1/-4 is stored as (-1, 4), so the witness changes sign with p
    cert = nullhomology(make_diagram([(1, -4)], [[0]]), AuxKnot(-1, (1,)))
    assert cert.order == 1 and cert.witness == (-1,)
    cert = nullhomology(make_diagram([(-5, 2)], [[0]]), AuxKnot(-1, (1,)))
    assert cert.order == 5 and cert.witness == (-1,)
    cert = nullhomology(make_diagram([(2, 1), (3, 1)], [[0, 1], [1, 0]]), AuxKnot(0, (0, 0)))
    assert cert.order == 1 and cert.witness == (0, 0)
    assert nullhomology(make_diagram([0], [[0]]), AuxKnot(-1, (1,))) is None


def test_nullhomology_dimension_check():
    with pytest.raises(DimensionError):
        nullhomology(make_diagram([1], [[0]]), AuxKnot(-1, (1, 1)))


def test_exterior_examples():
    assert exterior_homology(SurgeryDiagram(), AuxKnot(-1, ())) == AbelianGroup((), 1)
    for n in (-3, 1, 4):
        d = make_diagram([(1, n)], [[0]])
        assert exterior_homology(d, AuxKnot(-1, (1,))) == AbelianGroup((), 1)
        # oracle: sympy invariant factors of the 2x1 relation matrix [[n], [1]]
        assert [int(x) for x in sympy_invariant_factors(Matrix([[n], [1]]), domain=ZZ)] == [1]
    d = make_diagram([(-5, 2)], [[0]])
    assert exterior_homology(d, AuxKnot(-1, (0,))) == AbelianGroup((5,), 1)


def random_diagram(rng, n):
    slopes = [random_coprime_pair(rng) for _ in range(n)]
    return make_diagram(slopes, random_symmetric(rng, n)), slopes


def test_homology_against_determinant_and_rank():
    rng = random.Random(5)
    for _ in range(300):
        n = rng.randint(1, 4)
        d, _ = random_diagram(rng, n)
        Q = build_q(d).tolist()
        h = first_homology(d)
        assert h.free_rank == n - rank_q(Q)
        det = det_fraction(Q)
        if det:
            assert h.order == abs(det)
        # sympy cross-check of the invariant factors
        inv = [int(x) for x in sympy_invariant_factors(Matrix(Q), domain=ZZ)]
        assert list(h.torsion) == [x for x in inv if x > 1]


def test_nullhomology_against_multiple_scan():
    """Order of sum l_i0 mu_i by scanning multiples k = 1.. |H_1| with exact rational solves."""
    rng = random.Random(9)
    checked = 0
    while checked < 200:
        n = rng.randint(1, 3)
        d, _ = random_diagram(rng, n)
        Q = build_q(d).tolist()
        det = abs(det_fraction(Q))
        if det == 0 or det > 1000:
            continue
        l = [rng.randint(-3, 3) for _ in range(n)]
        x = solve_q_square(Q, l)
        k_scan = next(k for k in range(1, det + 1) if all((k * v).denominator == 1 for v in x))
        cert = nullhomology(d, AuxKnot(0, tuple(l)))
        assert cert.order == k_scan
        assert matvec(Q, cert.witness) == [cert.order * v for v in l]
        checked += 1


def test_sign_flip_invariance():
    rng = random.Random(13)
    for _ in range(200):
        n = rng.randint(1, 4)
        d, slopes = random_diagram(rng, n)
        raw = [(s.p, s.q) for s in d.slopes]
        flip = [(-p, -q) if rng.random() < 0.5 else (p, q) for p, q in raw]
        Q1 = build_q(d)
        Q2 = relation_matrix(flip, d.linking)
        assert cokernel(Q1) == cokernel(Q2)
        l = [rng.randint(-2, 2) for _ in range(n)]
        assert cokernel_order(Q1, l) == cokernel_order(Q2, l)


def test_exterior_relation_matrix_layout():
    d = make_diagram([(1, 2), (2, 1)], [[0, 1], [1, 0]])
    M = exterior_relation_matrix(d, AuxKnot(0, (1, 2)))
    assert M.tolist() == [[2, 2], [1, 1], [2, 2]]

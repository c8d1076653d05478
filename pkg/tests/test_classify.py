from fractions import Fraction

import pytest

from eislat.classify import (
    DIAGONAL_POINT,
    FERMAT_POINT,
    NotAReflectionError,
    biflection_transform_type,
    central_composite_spinor,
    d4_theta,
    diagonal_complement_check,
    fermat_complement_check,
    gluing_profile,
    identify,
    long_root_transitivity,
    orbit_invariance,
    orthogonal_short_roots,
)
from eislat.eisenstein import OMEGA
from eislat.hermitian import DIAG5, Isometry, biflection
from eislat.linalg import gram_determinant
from eislat.matrix import diagonal, identity

E0 = DIAG5.vector([1, 0, 0, 0, 0])


def test_norms():
    assert DIAGONAL_POINT.norm() == -5
    assert FERMAT_POINT.norm() == -3


def test_orthogonal_short_roots():
    assert len(orthogonal_short_roots(E0)) == 24
    assert orthogonal_short_roots(DIAGONAL_POINT) == []
    assert orthogonal_short_roots(FERMAT_POINT) == []
    with pytest.raises(ValueError):
        orthogonal_short_roots(DIAG5.vector([0, 1, 0, 0, 0]))


def test_identify():
    assert identify(DIAGONAL_POINT) == "diagonal"
    assert identify(FERMAT_POINT) == "fermat"
    assert identify(E0) is None
    assert identify(DIAG5.vector([2, 1, 0, 0, 0])) is None


def test_gluing_diagonal():
    g = gluing_profile(DIAGONAL_POINT)
    assert g.ok
    assert g.perp_determinant == 5
    assert g.perp_order == g.line_order == 25
    # 5 is inert in E: every nonzero class has norm k/5, six of each
    assert g.perp_norms == [Fraction(0)] + [Fraction(k, 5) for k in range(1, 5) for _ in range(6)]


def test_gluing_fermat():
    g = gluing_profile(FERMAT_POINT)
    assert g.ok
    assert g.perp_determinant == 3
    assert g.perp_order == 9
    assert g.perp_norms == [Fraction(0)] * 3 + [Fraction(1, 3)] * 6
    assert g.line_norms == [Fraction(0)] * 3 + [Fraction(2, 3)] * 6


def test_gluing_trivial():
    g = gluing_profile(E0)
    assert g.ok and g.perp_order == 1


def test_gluing_needs_primitive():
    with pytest.raises(ValueError):
        gluing_profile(DIAG5.vector([2, 0, 0, 0, 0]))


def test_d4_theta():
    D4 = d4_theta()
    assert gram_determinant(D4) == 3
    assert D4.vectors_of_norm(1) == []
    assert len(D4.vectors_of_norm(2)) == 108


def test_fermat_complement():
    r = fermat_complement_check()
    assert r.ok
    assert r.counts_perp == r.counts_d4 == {1: 0, 2: 108, 3: 240}


def test_fermat_budget():
    r = fermat_complement_check(budget=10)
    assert not r.isometry_found
    assert r.isometry_status == "not found within budget"


def test_diagonal_complement():
    r = diagonal_complement_check()
    assert r.ok
    assert r.long_roots == 60
    assert r.chain_gram_determinant == 5


def test_biflection_types():
    r = DIAG5.vector([0, 0, 0, 1, -1])
    t = biflection_transform_type(biflection(r))
    assert t.norm == 2 and t.long_root
    t0 = biflection_transform_type(biflection(E0))
    assert t0.norm == -1 and not t0.long_root
    assert central_composite_spinor(r) == 1


def test_biflection_rejects():
    # fixes a rank-3 sublattice: not a reflection
    M = diagonal([1, 1, 1, -1, -1])
    with pytest.raises(NotAReflectionError):
        biflection_transform_type(Isometry(M, DIAG5))
    with pytest.raises(ValueError):
        biflection_transform_type(Isometry(identity(5), DIAG5))
    with pytest.raises(ValueError):
        biflection_transform_type(Isometry(diagonal([OMEGA] * 5), DIAG5))


def test_orbit_invariance():
    assert orbit_invariance(DIAGONAL_POINT, "diagonal", samples=4).ok
    assert orbit_invariance(FERMAT_POINT, "fermat", samples=4).ok


def test_long_root_transitivity():
    r = long_root_transitivity(samples=20)
    assert r.ok and r.transported == 20

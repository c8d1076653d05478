from fractions import Fraction

import pytest
from hypothesis import given

from eislat.eisenstein import ONE, THETA, ZERO, EisInt, canonical_associate, divides, is_unit
from eislat.hermitian import DIAG5, standard_gram
from eislat.linalg import (
    DegenerateError,
    Sublattice,
    brute_force_norm,
    disc_group,
    elementary_divisors,
    enumerate_gram,
    gram_determinant,
    hermitian_inertia,
    hnf,
    is_positive_definite,
    kernel,
    orthogonal_complement,
    rank,
    smith,
)
from eislat.matrix import det, mat_mul, mat_vec

from conftest import eis_matrix

E4 = standard_gram(4).entries


@given(eis_matrix(3, 4))
def test_hnf_properties(M):
    H, U = hnf(M)
    assert mat_mul(U, M) == H
    assert is_unit(det(U))
    # echelon with canonical pivots
    last = -1
    for row in H:
        nz = [j for j, x in enumerate(row) if x]
        if not nz:
            continue
        assert nz[0] > last
        last = nz[0]
        assert row[nz[0]] == canonical_associate(row[nz[0]])


@given(eis_matrix(3, 3))
def test_smith_properties(M):
    D, P, Q = smith(M)
    assert mat_mul(P, mat_mul(M, Q)) == D
    assert is_unit(det(P)) and is_unit(det(Q))
    ds = [D[i][i] for i in range(3)]
    assert all(D[i][j] == ZERO for i in range(3) for j in range(3) if i != j)
    for a, b in zip(ds, ds[1:]):
        assert divides(a, b) or not a and not b
    assert rank(M) == sum(1 for d in ds if d)


@given(eis_matrix(2, 4))
def test_kernel(M):
    K = kernel(M)
    assert len(K) == 4 - rank(M)
    for k in K:
        assert not any(mat_vec(M, k))


def test_elementary_divisors_of_theta():
    assert elementary_divisors(((THETA,),)) == [canonical_associate(THETA)]


@pytest.mark.parametrize("t", [1, 2, 3])
def test_enumeration_matches_brute_force_e2(t):
    G = standard_gram(2).entries
    assert enumerate_gram(G, t) == brute_force_norm(G, t, box=2)


def test_enumeration_counts_e4():
    # E^4 = four copies of the hexagonal lattice: 6 * 4 short vectors
    assert len(enumerate_gram(E4, 1)) == 24
    assert len(enumerate_gram(E4, 2)) == 216


def test_enumeration_at_most():
    G = standard_gram(2).entries
    n = len(enumerate_gram(G, 2, at_most=True))
    assert n == 1 + len(enumerate_gram(G, 1)) + len(enumerate_gram(G, 2))


def test_inertia():
    assert hermitian_inertia(DIAG5.entries) == (4, 1, 0)
    assert is_positive_definite(E4)
    assert not is_positive_definite(DIAG5.entries)


def test_disc_group_unimodular():
    g = disc_group(E4)
    assert g.order == 1


def test_disc_group_theta_line():
    # theta E inside E has Gram (3): 9 classes, norms 0 (x3) and 1/3 (x6)
    g = disc_group(((EisInt(3),),))
    assert g.determinant == 3
    assert g.order == 9
    assert g.norms() == [Fraction(0)] * 3 + [Fraction(1, 3)] * 6


def test_disc_group_degenerate():
    with pytest.raises(DegenerateError):
        disc_group(((ZERO,),))


def test_orthogonal_complement_of_e0():
    v = DIAG5.vector([1, 0, 0, 0, 0])
    L = orthogonal_complement(v)
    assert L.rank == 4
    assert gram_determinant(L) == 1
    assert len(L.vectors_of_norm(1)) == 24


def test_sublattice_saturation_and_coordinates():
    L = Sublattice(standard_gram(2), ((THETA, ZERO),))
    S = L.saturation()
    assert S.contains((ONE, ZERO))
    assert not L.contains((ONE, ZERO))
    assert L.coordinates((THETA * 2, ZERO)) == (EisInt(2),)


import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from eislat.finite import (
    WEYL_E6_ORDER,
    F3,
    F3Isometry,
    NotAnIsometryError,
    all_reflections,
    bfs_closure,
    cartan_dieudonne,
    count_norm_one,
    decode,
    encode,
    expected_go_order,
    identity_f3,
    minus_identity,
    product_of_reflections,
    projective_rep,
    reduce_gram,
    reduce_isometry,
    reduce_vector,
    spinor_norm,
)
from eislat.gamma import generator
from eislat.hermitian import DIAG5, HYP5, isometry_hyp_to_diag

FORM = reduce_gram(DIAG5)
REFL = all_reflections(FORM)


def test_field():
    assert F3(2) * F3(2) == F3(1)
    assert F3(1) + F3(2) == F3(0)
    assert F3(2).inverse() == F3(2)
    with pytest.raises(ZeroDivisionError):
        F3(0).inverse()


def test_form_is_nondegenerate():
    assert FORM.is_nondegenerate()
    assert reduce_gram(HYP5).is_nondegenerate()


def test_norm_one_counts():
    # exhaustive over the 243 vectors
    assert count_norm_one(FORM) == (72, 36)
    assert len(FORM.vectors()) == 243


def test_reflections():
    # nonisotropic projective points: 81 = (243 - 1 - 80) / 2
    assert len(REFL) == 81
    for v, M in REFL:
        g = F3Isometry(tuple(map(tuple, M)), FORM)
        assert (g @ g).is_identity()
        assert g.apply(v) == tuple((-x) % 3 for x in v)


def test_not_an_isometry():
    M = np.eye(5, dtype=np.int64)
    M[0, 1] = 1
    with pytest.raises(NotAnIsometryError):
        F3Isometry(tuple(map(tuple, M)), FORM)


words = st.lists(st.integers(0, len(REFL) - 1), max_size=12)


@given(words)
def test_cartan_dieudonne_reconstructs(idx):
    M = np.eye(5, dtype=np.int64)
    for i in idx:
        M = (M @ REFL[i][1]) % 3
    g = F3Isometry(tuple(map(tuple, M)), FORM)
    vs = cartan_dieudonne(g)
    assert np.array_equal(product_of_reflections(FORM, vs), M)
    assert len(vs) <= 6
    # det = (-1)^length
    assert round(np.linalg.det(M)) % 3 == (1 if len(vs) % 2 == 0 else 2)


@given(words)
def test_spinor_norm_is_multiplicative(idx):
    M = np.eye(5, dtype=np.int64)
    expected = 1
    for i in idx:
        v, R = REFL[i]
        M = (M @ R) % 3
        expected *= 1 if FORM.q(v) == 1 else -1
    assert spinor_norm(F3Isometry(tuple(map(tuple, M)), FORM)) == expected


def test_central_involution():
    assert spinor_norm(minus_identity(FORM)) == -1
    assert len(cartan_dieudonne(minus_identity(FORM))) == 5
    assert spinor_norm(identity_f3(FORM)) == 1


def test_encode_round_trip():
    mats = np.array([M for _, M in REFL[:10]])
    assert np.array_equal(decode(encode(mats)), mats)


def test_reduced_generators():
    gens = [reduce_isometry(isometry_hyp_to_diag(generator(i))) for i in range(1, 8)]
    assert all(spinor_norm(g) == 1 for g in gens)
    C = bfs_closure([g.array() for g in gens])
    assert C.order == WEYL_E6_ORDER
    # -1 is not in the generated group
    assert not C.contains(minus_identity(FORM).array())


def test_projective_rep():
    assert projective_rep((0, 2, 1)) == (0, 1, 2)
    assert projective_rep((0, 0, 0)) == (0, 0, 0)
    assert reduce_vector(DIAG5.vector([3, 1, 1, 1, 1]).coords) == (0, 1, 1, 1, 1)


def test_expected_order():
    assert expected_go_order() == 103680 == 2 * WEYL_E6_ORDER

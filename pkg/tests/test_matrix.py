from hypothesis import given

from eislat.eisenstein import ONE, ZERO, EisInt
from eislat.matrix import adjugate, det, identity, mat_mul, scalar_matrix, transpose

from conftest import eis_matrix


@given(eis_matrix(3, 3), eis_matrix(3, 3))
def test_det_multiplicative(A, B):
    assert det(mat_mul(A, B)) == det(A) * det(B)


@given(eis_matrix(4, 4, bound=3))
def test_adjugate_identity(A):
    d = det(A)
    assert mat_mul(A, adjugate(A)) == scalar_matrix(d, 4)


@given(eis_matrix(3, 3))
def test_det_transpose(A):
    assert det(transpose(A)) == det(A)


def test_small_cases():
    assert det(identity(5)) == ONE
    assert det(((EisInt(0, 1), ZERO), (ZERO, EisInt(0, 1)))) == EisInt(-1, -1)

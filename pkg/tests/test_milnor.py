import numpy as np
import pytest

from eislat.milnor import char_poly, matrix_order, nodal_monodromy, signature_forcing_check, tensor_system, vk


@pytest.mark.parametrize("k", range(2, 9))
@pytest.mark.parametrize("direction", [1, -1])
def test_vk(k, direction):
    m = vk(k, direction).monodromy
    assert m.shape == (k - 1, k - 1)
    assert matrix_order(m) == k
    # 1 + t + ... + t^{k-1} annihilates the shift
    acc = sum(np.linalg.matrix_power(m, i) for i in range(k))
    assert not acc.any()
    assert [int(c) for c in char_poly(m).all_coeffs()] == [1] * k


def test_vk_small():
    assert vk(2).monodromy.tolist() == [[-1]]
    with pytest.raises(ValueError):
        vk(1)


def test_directions_are_inverse():
    for k in (3, 5):
        a, b = vk(k, 1).monodromy, vk(k, -1).monodromy
        assert np.array_equal(a @ b, np.eye(k - 1, dtype=np.int64))


def test_tensor_is_kronecker():
    t = tensor_system((3, 4))
    assert np.array_equal(t.monodromy, np.kron(vk(3).monodromy, vk(4).monodromy))
    assert t.rank == 6
    assert tensor_system((2, 2)).monodromy.tolist() == [[1]]


@pytest.mark.parametrize("direction", [1, -1])
def test_nodal(direction):
    r = nodal_monodromy(direction)
    assert r.ok
    assert r.char_poly == [1, -1, 1]


def test_signature():
    s = signature_forcing_check()
    assert s.ok
    assert s.inertia == (4, 1, 0)

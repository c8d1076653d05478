
import pytest
from hypothesis import given
from hypothesis import strategies as st

from eislat.eisenstein import OMEGA, ONE, ZERO
from eislat.hermitian import (
    DIAG5,
    HYP5,
    RHO,
    ROOTS,
    FrameError,
    HermGram,
    Isometry,
    NotIntegralError,
    ParityError,
    TranslationParams,
    base_change_hyp_to_diag,
    biflection,
    diag_to_hyp,
    eisenstein_basis,
    hermitian_from_symplectic,
    heisenberg_commutator,
    heisenberg_product,
    hexflection,
    hyp_to_diag,
    inner,
    isometry_hyp_to_diag,
    symplectic_from_hermitian,
    translation,
    translation_params_of,
    triflection,
)
from eislat.matrix import conj_transpose, mat_mul

from conftest import eis, eis_vec


def test_frames():
    assert DIAG5.determinant() == -1
    assert HYP5.determinant() == -1
    assert HYP5.norm(RHO.coords) == 0
    M = base_change_hyp_to_diag()
    assert mat_mul(conj_transpose(M), mat_mul(DIAG5.entries, M)) == HYP5.entries


def test_non_hermitian_rejected():
    with pytest.raises(ValueError):
        HermGram(((1, OMEGA), (OMEGA, 1)))


@given(eis_vec(5), eis_vec(5), eis())
def test_form_sesquilinear(v, w, c):
    cv = tuple(c * x for x in v)
    assert HYP5.form(cv, w) == c * HYP5.form(v, w)
    assert HYP5.form(w, cv) == c.conj() * HYP5.form(w, v)
    assert HYP5.form(v, w) == HYP5.form(w, v).conj()


@given(eis_vec(5))
def test_base_change_preserves_norm(v):
    x = HYP5.vector(v)
    y = hyp_to_diag(x)
    assert y.norm() == x.norm()
    assert diag_to_hyp(y) == x


def test_frame_mismatch():
    with pytest.raises(FrameError):
        inner(RHO, DIAG5.vector([1, 0, 0, 0, 0]))


def test_roots():
    for i, r in ROOTS.items():
        assert r.norm() == 1, i


@pytest.mark.parametrize("i", range(1, 8))
def test_reflection_orders(i):
    r = ROOTS[i]
    h = hexflection(r)
    assert h.order() == 6
    assert triflection(r).order() == 3
    assert biflection(r).order() == 2
    assert h(r) == r.scale(-OMEGA)
    # an isometry: checked on construction
    Isometry(h.matrix, HYP5)


def test_long_root_triflection_not_integral():
    v = DIAG5.vector([0, 1, 1, 0, 0])
    assert biflection(v).order() == 2
    with pytest.raises(NotIntegralError):
        triflection(v)


@given(eis_vec(5, 3))
def test_reflection_fixes_perp(x):
    r = ROOTS[3]
    h = hexflection(r)
    v = HYP5.vector(x)
    img = h(v)
    # h(x) = x - (1 + w) h(x, r) r
    c = (ONE + OMEGA) * inner(v, r)
    assert img == v - r.scale(c)


def params(bound=6):
    @st.composite
    def draw(d):
        lam = d(eis_vec(3, bound))
        n = sum(x.norm() for x in lam)
        k = d(st.integers(-20, 20))
        k += (k - n) % 2
        return TranslationParams(lam, k)

    return draw()


def test_parity():
    with pytest.raises(ParityError):
        TranslationParams((ONE, ZERO, ZERO), 0)


@given(params())
def test_translation_fixes_rho(p):
    T = translation(p)
    Isometry(T.matrix, HYP5)
    assert T(RHO) == RHO
    assert translation_params_of(T) == p


@given(params(), params())
def test_heisenberg_laws(p, q):
    Tp, Tq = translation(p), translation(q)
    assert (Tp @ Tq).matrix == translation(heisenberg_product(p, q)).matrix
    assert (Tp @ translation(p.inverse())).is_identity()
    comm = Tp @ Tq @ Tp.inverse() @ Tq.inverse()
    assert comm.matrix == translation(heisenberg_commutator(p, q)).matrix


def test_hyp_isometry_transfer():
    g = hexflection(ROOTS[3])
    d = isometry_hyp_to_diag(g)
    Isometry(d.matrix, DIAG5)


def test_symplectic_round_trip():
    for G in (DIAG5, HYP5):
        Om, sigma = symplectic_from_hermitian(G)
        H = hermitian_from_symplectic(Om, sigma, [[1 if t == 2 * i else 0 for t in range(10)] for i in range(5)])
        assert H.entries == G.entries


def test_symplectic_with_computed_basis():
    Om, sigma = symplectic_from_hermitian(DIAG5)
    basis = eisenstein_basis(sigma)
    H = hermitian_from_symplectic(Om, sigma, basis)
    assert H.determinant() in (1, -1)
    # same signature as DIAG5
    from eislat.linalg import hermitian_inertia

    assert hermitian_inertia(H.entries) == (4, 1, 0)


def test_symplectic_rejects_bad_pair():
    Om, sigma = symplectic_from_hermitian(DIAG5)
    bad = [row[:] for row in sigma]
    bad[0][0] += 1
    with pytest.raises(ValueError):
        hermitian_from_symplectic(Om, bad)

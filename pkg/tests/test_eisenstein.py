import pytest
from hypothesis import given

from eislat.eisenstein import (
    OMEGA,
    OMEGA_BAR,
    ONE,
    THETA,
    UNITS,
    ZERO,
    EisInt,
    canonical_associate,
    divides,
    euclid_div,
    exact_div,
    gcd,
    is_unit,
    mod_theta,
    nearest_quotient,
    parse_eis,
)

from conftest import eis, nonzero_eis


def test_constants():
    assert OMEGA * OMEGA == OMEGA_BAR
    assert OMEGA * OMEGA * OMEGA == ONE
    assert ONE + OMEGA + OMEGA_BAR == ZERO
    assert THETA == OMEGA - OMEGA_BAR
    assert THETA * THETA == EisInt(-3)
    assert THETA.norm() == 3


def test_units_are_powers_of_minus_omega():
    u = -OMEGA
    p = ONE
    for k in range(6):
        assert UNITS[k] == p
        p = p * u
    assert p == ONE
    assert len(set(UNITS)) == 6
    assert all(is_unit(x) for x in UNITS)
    assert not is_unit(THETA)


@given(eis(), eis(), eis())
def test_ring_axioms(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    assert x - x == ZERO


@given(eis(), eis())
def test_norm_multiplicative_and_conj(x, y):
    assert (x * y).norm() == x.norm() * y.norm()
    assert (x * y).conj() == x.conj() * y.conj()
    assert x * x.conj() == EisInt(x.norm())
    assert x.norm() >= 0


@given(eis(50), nonzero_eis(20))
def test_nearest_quotient_covering_radius(n, d):
    # |n/d - q|^2 <= 1/3
    q = nearest_quotient(n, d)
    assert 3 * (n - q * d).norm() <= d.norm()


@given(eis(50), nonzero_eis(20))
def test_euclid_div(n, d):
    q, r = euclid_div(n, d)
    assert n == q * d + r
    assert r.norm() < d.norm()


@given(eis(), nonzero_eis())
def test_exact_div_and_divides(x, d):
    assert exact_div(x * d, d) == x
    assert divides(d, x * d)


def test_exact_div_raises():
    with pytest.raises(ArithmeticError):
        exact_div(EisInt(1), EisInt(2))


@given(eis(), eis())
def test_gcd_divides_both(x, y):
    g = gcd(x, y)
    if x or y:
        assert divides(g, x) and divides(g, y)
        assert g == canonical_associate(g)


@given(nonzero_eis())
def test_canonical_associate(x):
    c = canonical_associate(x)
    assert c.a > c.b >= 0
    assert any(u * x == c for u in UNITS)
    assert canonical_associate(c) == c


@given(eis(), eis())
def test_mod_theta_is_a_ring_map(x, y):
    assert mod_theta(x + y) == (mod_theta(x) + mod_theta(y)) % 3
    assert mod_theta(x * y) == (mod_theta(x) * mod_theta(y)) % 3
    assert mod_theta(x.conj()) == mod_theta(x)


def test_mod_theta_kernel():
    assert mod_theta(THETA) == 0
    assert mod_theta(OMEGA) == 1
    assert mod_theta(EisInt(3)) == 0


@pytest.mark.parametrize(
    "text,value",
    [
        ("3", EisInt(3)),
        ("-1+2w", EisInt(-1, 2)),
        ("2-wb", EisInt(3, 1)),
        ("1+2*w", EisInt(1, 2)),
        ("w", OMEGA),
        ("-wb", -OMEGA_BAR),
    ],
)
def test_parse(text, value):
    assert parse_eis(text) == value


@pytest.mark.parametrize("text", ["", "x", "2w3", "1++w"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        parse_eis(text)

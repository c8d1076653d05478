import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eislat.eisenstein import OMEGA, ONE, THETA, UNITS, EisInt
from eislat.gamma import (
    ESCAPE_WORD,
    LONG_TARGET,
    MACRO_WORDS,
    MINUS_RHO_WORD,
    ReductionError,
    Word,
    adjacent_transport,
    gen_word,
    omega_scalar_word,
    orbit_transport,
    random_word,
    reduce_null,
    short_root_to_r1,
    torsion_check,
    translation_word,
    unit_word,
    verify_braid_table,
    verify_named_identities,
)
from eislat.hermitian import DIAG5, HYP5, RHO, ROOTS, adjacent
from eislat.matrix import identity, scalar_matrix


def test_braid_table():
    table = verify_braid_table()
    assert len(table) == 21
    assert sum(t["relation"] == "braid" for t in table) == 6
    assert all(t["ok"] for t in table)


def test_named_identities():
    for c in verify_named_identities():
        assert c["ok"], c["name"]


def test_word_algebra():
    w = gen_word((1, 1), (2, 3), (5, 4))
    assert (w + w.inverse()).matrix() == identity(5)
    assert w.power(3).matrix() == (w + w + w).matrix()
    assert Word.from_json(w.to_json()) == w
    # hexflections have order 6, so exponents are normalized
    assert gen_word((1, 7)) == gen_word((1, 1))
    assert len(gen_word((1, 6))) == 0


def test_macro_expansion():
    for name in MACRO_WORDS:
        w = Word(((name, 1),))
        assert w.expand().matrix() == w.matrix()
        assert all(n.startswith("R") for n, _ in w.expand().tokens)


@given(
    st.tuples(*[st.builds(EisInt, st.integers(-4, 4), st.integers(-4, 4))] * 3),
    st.integers(-6, 6),
)
def test_translation_word(lam, k):
    n = sum(x.norm() for x in lam)
    k += (k - n) % 2
    from eislat.hermitian import TranslationParams, translation

    assert translation_word(lam, k).matrix() == translation(TranslationParams(lam, k)).matrix


@pytest.mark.parametrize("i,j", [(i, j) for i in range(1, 8) for j in range(1, 8) if adjacent(i, j)])
def test_adjacent_transport(i, j):
    img = adjacent_transport(i, j).apply(ROOTS[i].coords)
    assert img == ROOTS[j].coords


def test_escape_word():
    # r3 -> r7 using R3, R6, R7 only, which fix the first two coordinates
    assert ESCAPE_WORD.apply(ROOTS[3].coords) == ROOTS[7].coords
    assert {n for n, _ in ESCAPE_WORD.tokens} <= {"R3", "R6", "R7"}


@settings(max_examples=40)
@given(st.integers(0, 10**6), st.integers(1, 30))
def test_reduce_null_random_images(seed, length):
    w = random_word(random.Random(seed), length)
    v = w.apply(RHO.coords)
    cert = reduce_null(v)
    assert cert.verify()
    hs = cert.heights
    assert all(b < a for a, b in zip(hs, hs[1:]))
    full = reduce_null(v, normalize_unit=True)
    assert full.final == RHO.coords
    assert full.word.apply(v) == RHO.coords


def test_reduce_rho_is_empty():
    cert = reduce_null(RHO)
    assert len(cert.word) == 0
    assert cert.unit == ONE


def test_reduce_null_errors():
    with pytest.raises(ReductionError):
        reduce_null((1, 0, 0, 0, 1))  # norm 1
    with pytest.raises(ReductionError):
        reduce_null((0, 0, 0, 0, 3))  # not primitive
    with pytest.raises(ReductionError):
        reduce_null((0, 0, 0, 0, 0))


def test_basic_mode_escape():
    # hexflections only: the reflections cannot lower this height and the
    # orthogonal-root escape is needed once
    v = (1, 1, 1, THETA, ONE - OMEGA)
    assert HYP5.norm(v) == 0
    cert = reduce_null(v, powers=(1,), extended=False)
    assert cert.verify()
    assert cert.heights == [3, 4, 1, 0]
    assert cert.escapes() == 1
    # the default mode reduces it directly
    assert reduce_null(v).escapes() == 0


def test_minus_rho_word():
    assert MINUS_RHO_WORD.apply(RHO.coords) == tuple(-x for x in RHO.coords)


@pytest.mark.parametrize("u", UNITS)
def test_unit_words(u):
    assert unit_word(u).apply(RHO.coords) == tuple(u * x for x in RHO.coords)


def test_omega_scalar_word():
    assert omega_scalar_word().matrix() == scalar_matrix(OMEGA, 5)


def test_short_root_transport():
    rng = random.Random(5)
    for _ in range(10):
        w = random_word(rng, rng.randint(1, 12))
        r = w.apply(ROOTS[3].coords)
        assert short_root_to_r1(r).apply(r) == ROOTS[1].coords
    res = orbit_transport(ROOTS[3].coords, ROOTS[7].coords)
    assert res.found and res.word.apply(ROOTS[3].coords) == ROOTS[7].coords


def test_long_root_transport():
    rng = random.Random(6)
    b = (1, -1, 0, 0, 0)
    for _ in range(10):
        w = random_word(rng, rng.randint(1, 12))
        x = w.apply(b)
        res = orbit_transport(x, LONG_TARGET)
        assert res.found
        assert res.word.apply(x) == LONG_TARGET


def test_transport_norm_mismatch():
    with pytest.raises(ValueError):
        orbit_transport(ROOTS[1].coords, RHO.coords)
    assert not orbit_transport((1, 1, 1, 0, 0), (1, 1, 1, 0, 0)).found


@pytest.mark.parametrize("k", [1, 2, 3, 4])
@pytest.mark.parametrize("scalar", [ONE, OMEGA])
def test_torsion(k, scalar):
    es = [DIAG5.vector([1 if j == i else 0 for j in range(5)]) for i in range(1, 5)]
    r = torsion_check(es[:k], scalar)
    assert r.ok, r.to_json()

import pytest
from hypothesis import given
from hypothesis import strategies as st

from eislat.arrangement import (
    Mirror,
    family_of,
    intersect_by_complement,
    mirrors,
    mirrors_intersect,
    normalize_root,
    scan,
    short_roots,
    stratum_stabilizer,
)
from eislat.eisenstein import UNITS
from eislat.hermitian import DIAG5

ROOTS1 = short_roots(1)
MIRRORS1 = mirrors(1)


def test_counts_bound_one():
    # v0 = 0: 24 roots; v0 a unit: 6 * 216 roots of E^4 norm 2
    assert len(ROOTS1) == 24 + 6 * 216 == 1320
    assert len(MIRRORS1) == 1320 // 6
    assert all(DIAG5.norm(r) == 1 for r in ROOTS1)


def test_mirror_normalization():
    r = ROOTS1[100]
    for u in UNITS:
        assert Mirror(tuple(u * x for x in r)).root == normalize_root(r)
    with pytest.raises(ValueError):
        Mirror(DIAG5.vector([0, 1, 1, 0, 0]).coords)


@given(st.integers(0, len(MIRRORS1) - 1), st.integers(0, len(MIRRORS1) - 1))
def test_intersection_criteria_agree(i, j):
    if i == j:
        return
    m, n = MIRRORS1[i], MIRRORS1[j]
    assert mirrors_intersect(m, n) == intersect_by_complement(m, n)
    if mirrors_intersect(m, n):
        assert not DIAG5.form(m.root, n.root)


@given(st.integers(0, len(MIRRORS1) - 1), st.sampled_from(UNITS))
def test_family_is_projective(i, u):
    r = MIRRORS1[i].root
    assert family_of(tuple(u * x for x in r)) == family_of(r)


def test_scan_default_bound():
    r = scan()
    assert r.roots >= 1000
    assert r.ok and r.all_families
    assert r.intersecting_pairs == r.orthogonal_pairs
    assert r.families == 36


def test_scan_small_bound_misses_families():
    r = scan(1)
    assert r.ok
    assert r.families == 28


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_stratum_stabilizer(k):
    es = [DIAG5.vector([1 if j == i else 0 for j in range(5)]) for i in range(1, 5)]
    st_ = stratum_stabilizer(es[:k])
    assert st_.ok
    assert st_.order == 3**k


def test_stratum_requires_orthogonal():
    with pytest.raises(ValueError):
        stratum_stabilizer([DIAG5.vector([0, 1, 0, 0, 0]), DIAG5.vector([1, 1, 1, 0, 0])])

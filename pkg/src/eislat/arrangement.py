"""The mirror arrangement: short roots of the DIAG5 lattice, the mirrors
they define, intersection and orthogonality, and the 36 mirror families
given by reduction mod theta.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .eisenstein import EisInt, UNITS
from .finite import projective_rep, reduce_vector
from .hermitian import DIAG5, HermGram, Isometry, LatVec, inner, triflection
from .linalg import Sublattice, enumerate_gram, hermitian_inertia, kernel, vec_key
from .matrix import Vec, identity, to_pairs, vec


def normalize_root(v: Sequence[EisInt]) -> Vec:
    """The lexicographically least of the six unit multiples of v."""
    v = vec(v)
    return min((tuple(u * x for x in v) for u in UNITS), key=vec_key)


@dataclass(frozen=True)
class Mirror:
    root: Vec
    frame: HermGram = field(default=DIAG5, repr=False)

    def __post_init__(self) -> None:
        r = normalize_root(self.root)
        object.__setattr__(self, "root", r)
        if self.frame.norm(r) != 1:
            raise ValueError("a mirror is defined by a short root")

    def vector(self) -> LatVec:
        return LatVec(self.root, self.frame)


def family_of(m: Mirror | Sequence[EisInt]) -> tuple[int, ...]:
    """Projective F_3 class of the reduced root (first nonzero entry 1)."""
    root = m.root if isinstance(m, Mirror) else vec(m)
    return projective_rep(reduce_vector(root))


def mirrors_intersect(m: Mirror, m2: Mirror) -> bool:
    """Whether two distinct mirrors meet inside complex hyperbolic space.

    They meet iff some negative vector is orthogonal to both roots, iff (by
    signature (4, 1)) the roots span a positive definite plane, iff the
    2x2 Gram has positive leading minors.
    """
    if m.root == m2.root:
        raise ValueError("mirrors are equal")
    h = m.frame.form(m.root, m2.root)
    # leading minors: 1 and 1 - |h|^2
    return 1 - h.norm() > 0


def intersect_by_complement(m: Mirror, m2: Mirror) -> bool:
    """Independent test: the common orthogonal complement has a negative direction."""
    rows = []
    for r in (m.root, m2.root):
        rows.append(tuple(m.frame.form(tuple(1 if t == j else 0 for t in range(m.frame.n)), r) for j in range(m.frame.n)))
    basis = kernel(tuple(rows))
    L = Sublattice(m.frame, tuple(basis))
    _, neg, _ = hermitian_inertia(L.gram())
    return neg > 0


def short_roots(bound: int, frame: HermGram = DIAG5) -> list[Vec]:
    """All short roots of DIAG5 with norm(v_0) <= bound, sorted."""
    if frame is not DIAG5 and frame.entries != DIAG5.entries:
        raise ValueError("short-root enumeration is implemented for DIAG5")
    out = []
    E4 = identity(4)
    by_norm: dict[int, list[Vec]] = {}
    for a in range(-bound - 1, bound + 2):
        for b in range(-bound - 1, bound + 2):
            x = EisInt(a, b)
            m = x.norm()
            if m > bound:
                continue
            if 1 + m not in by_norm:
                by_norm[1 + m] = enumerate_gram(E4, 1 + m)
            for rest in by_norm[1 + m]:
                out.append((x,) + rest)
    out.sort(key=vec_key)
    return out


def mirrors(bound: int) -> list[Mirror]:
    seen = {}
    for r in short_roots(bound):
        m = Mirror(r)
        seen[m.root] = m
    return [seen[k] for k in sorted(seen, key=vec_key)]


def _pairs_array(roots: Sequence[Vec]) -> np.ndarray:
    return np.array([[(x.a, x.b) for x in r] for r in roots], dtype=np.int64)


def _gram_table(R: np.ndarray, signs: np.ndarray, S: np.ndarray | None = None) -> tuple[np.ndarray, np.ndarray]:
    """h(v_i, w_j) for v in R, w in S (default R) as (a, b) integer tables.

    For x = a + b w, y = c + d w: x * conj(y) = (ac + bd - ad) + (bc - ad) w.
    """
    S = R if S is None else S
    sa = R[:, :, 0] * signs
    sb = R[:, :, 1] * signs
    c = S[:, :, 0]
    d = S[:, :, 1]
    # sum over coordinates of s_k x_k conj(y_k), x from row i, y from row j
    A = sa @ c.T + sb @ d.T - sa @ d.T
    B = sb @ c.T - sa @ d.T
    return A, B


@dataclass
class ScanReport:
    bound: int
    roots: int
    mirrors: int
    pairs: int
    intersecting_pairs: int
    orthogonal_pairs: int
    intersect_not_orthogonal: list
    complement_checked: int
    complement_mismatches: list
    families: int
    family_sizes: dict
    same_family_pairs: int
    same_family_violations: list
    equivariance_checked: int
    equivariance_violations: list

    @property
    def ok(self) -> bool:
        return (
            not self.intersect_not_orthogonal
            and not self.complement_mismatches
            and not self.same_family_violations
            and not self.equivariance_violations
        )

    @property
    def all_families(self) -> bool:
        return self.families == 36

    def to_json(self) -> dict:
        return {
            "bound": self.bound,
            "roots": self.roots,
            "mirrors": self.mirrors,
            "pairs": self.pairs,
            "intersecting_pairs": self.intersecting_pairs,
            "orthogonal_pairs": self.orthogonal_pairs,
            "intersect_not_orthogonal": self.intersect_not_orthogonal,
            "complement_checked": self.complement_checked,
            "complement_mismatches": self.complement_mismatches,
            "families": self.families,
            "family_mirror_counts": sorted(self.family_sizes.values()),
            "all_families": self.all_families,
            "same_family_pairs": self.same_family_pairs,
            "same_family_violations": self.same_family_violations,
            "equivariance_checked": self.equivariance_checked,
            "equivariance_violations": self.equivariance_violations,
            "ok": self.ok,
        }


DEFAULT_BOUND = 3  # smallest bound at which all 36 families occur


def scan(bound: int = DEFAULT_BOUND, seed: int = 0, complement_sample: int = 300, block: int = 256) -> ScanReport:
    """Exhaustive pair scan over mirrors of short roots with norm(v_0) <= bound.

    Checks: intersecting => orthogonal (all pairs); same family and distinct
    => h(v, v') nonzero mod theta (all pairs); the complement-inertia test
    agrees with the Gram test on seeded samples of orthogonal and of
    non-orthogonal pairs; family labels are equivariant under the reduced generators.
    """
    roots = short_roots(bound)
    ms = mirrors(bound)
    n = len(ms)
    R = _pairs_array([m.root for m in ms])
    signs = np.array([-1, 1, 1, 1, 1], dtype=np.int64)
    labels = [family_of(m) for m in ms]
    lab_ids = {l: i for i, l in enumerate(sorted(set(labels)))}
    L = np.array([lab_ids[l] for l in labels])

    pairs = intersecting = orthogonal = same_pairs = 0
    violations, sf_violations = [], []
    orth_pairs: list[tuple[int, int]] = []
    for i0 in range(0, n, block):
        i1 = min(n, i0 + block)
        A, B = _gram_table(R[i0:i1], signs, R)
        rows = np.arange(i0, i1)[:, None]
        upper = np.arange(n)[None, :] > rows  # pairs i < j only
        N = A * A - A * B + B * B  # norm of h(v_i, v_j)
        inter = upper & (1 - N > 0)
        orth = upper & (A == 0) & (B == 0)
        same = upper & (L[i0:i1, None] == L[None, :])
        # h mod theta is (a + b) mod 3
        sf_bad = same & ((A + B) % 3 == 0)
        pairs += int(upper.sum())
        intersecting += int(inter.sum())
        orthogonal += int(orth.sum())
        same_pairs += int(same.sum())
        for a, b in zip(*np.nonzero(inter & ~orth)):
            violations.append([to_pairs(ms[i0 + a].root), to_pairs(ms[b].root)])
        for a, b in zip(*np.nonzero(sf_bad)):
            sf_violations.append([to_pairs(ms[i0 + a].root), to_pairs(ms[b].root)])
        orth_pairs.extend((i0 + int(a), int(b)) for a, b in zip(*np.nonzero(orth)))

    # the complement-inertia test on seeded samples of both kinds of pair
    rng = random.Random(seed)
    check = rng.sample(orth_pairs, min(complement_sample, len(orth_pairs)))
    others = 0
    while others < complement_sample and n > 1:
        i, j = sorted(rng.sample(range(n), 2))
        if ms[i].frame.form(ms[i].root, ms[j].root):
            check.append((i, j))
            others += 1
    mismatches = []
    for i, j in check:
        m1, m2 = ms[i], ms[j]
        if intersect_by_complement(m1, m2) != mirrors_intersect(m1, m2):
            mismatches.append([to_pairs(m1.root), to_pairs(m2.root)])

    eq_checked, eq_bad = _equivariance(ms, rng)
    return ScanReport(
        bound=bound,
        roots=len(roots),
        mirrors=n,
        pairs=pairs,
        intersecting_pairs=intersecting,
        orthogonal_pairs=orthogonal,
        intersect_not_orthogonal=violations,
        complement_checked=len(check),
        complement_mismatches=mismatches,
        families=len(lab_ids),
        family_sizes={str(k): v for k, v in sorted(Counter(labels).items())},
        same_family_pairs=same_pairs,
        same_family_violations=sf_violations,
        equivariance_checked=eq_checked,
        equivariance_violations=eq_bad,
    )


def _equivariance(ms: Sequence[Mirror], rng: random.Random, sample: int = 100) -> tuple[int, list]:
    from .finite import reduce_isometry
    from .gamma import generator
    from .hermitian import isometry_hyp_to_diag

    gens = [isometry_hyp_to_diag(generator(i)) for i in range(1, 8)]
    reduced = [reduce_isometry(g) for g in gens]
    chosen = rng.sample(list(ms), min(sample, len(ms)))
    bad = []
    count = 0
    for g, gbar in zip(gens, reduced):
        for m in chosen:
            img = g.apply(m.root)
            lhs = family_of(img)
            rhs = projective_rep(gbar.apply(family_of(m)))
            count += 1
            if lhs != rhs:
                bad.append([to_pairs(m.root), list(lhs), list(rhs)])
    return count, bad


# --- stabilizers of strata ----------------------------------------------


@dataclass
class StratumReport:
    k: int
    order: int
    element_orders: dict
    all_congruent: bool

    @property
    def ok(self) -> bool:
        return self.order == 3 ** self.k and set(self.element_orders) <= {1, 3} and self.all_congruent


def stratum_stabilizer(roots: Sequence[LatVec]) -> StratumReport:
    """The group generated by triflections in k mutually orthogonal short roots."""
    from .finite import reduce_isometry

    for i, r in enumerate(roots):
        if r.norm() != 1:
            raise ValueError("need short roots")
        for s in roots[i + 1 :]:
            if inner(r, s):
                raise ValueError("roots are not mutually orthogonal")
    frame = roots[0].frame if roots else DIAG5
    gens = [triflection(r) for r in roots]
    ident = Isometry(identity(frame.n), frame, check=False)
    seen = {ident.matrix: ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = g @ s
                if h.matrix not in seen:
                    seen[h.matrix] = h
                    nxt.append(h)
        frontier = nxt
    orders = Counter(g.order(12) for g in seen.values())
    congruent = all(reduce_isometry(g).is_identity() for g in seen.values())
    return StratumReport(len(roots), len(seen), dict(orders), congruent)

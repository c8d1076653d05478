"""Negative vectors orthogonal to no short roots, and the structure of their
orthogonal complements.

The two representatives are the diagonal point v = (3, 1, 1, 1, 1) of norm
-5 and the Fermat point v = (2 - wbar, 1, 1, 1, 1) of norm -3 in DIAG5.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .eisenstein import ONE, OMEGA_BAR, THETA, ZERO, EisInt, gcd, is_unit
from .finite import reduce_isometry, spinor_norm
from .hermitian import (
    DIAG5,
    Isometry,
    LatVec,
    biflection,
    diag_to_hyp,
    isometry_hyp_to_diag,
)
from .linalg import (
    Sublattice,
    disc_group,
    enumerate_gram,
    frac_mod1,
    gram_determinant,
    kernel,
    orthogonal_complement,
    residues,
    vec_key,
)
from .matrix import Matrix, Vec, identity, mat_sub, scalar_matrix, to_pairs

DIAGONAL_POINT = DIAG5.vector([3, 1, 1, 1, 1])
FERMAT_POINT = DIAG5.vector([ONE + ONE - OMEGA_BAR, 1, 1, 1, 1])

# D4(theta): z in E^4 with z1 + z2 + z3 + z4 = 0 mod theta
D4_THETA_BASIS = (
    (ONE, -ONE, ZERO, ZERO),
    (ZERO, ONE, -ONE, ZERO),
    (ZERO, ZERO, ONE, -ONE),
    (THETA, ZERO, ZERO, ZERO),
)


def d4_theta() -> Sublattice:
    from .hermitian import standard_gram

    return Sublattice(standard_gram(4, "E4"), D4_THETA_BASIS)


class SearchExhausted(RuntimeError):
    pass


def _require_negative(v: LatVec) -> None:
    if v.norm() >= 0:
        raise ValueError("v must have negative norm so that v-perp is positive definite")


def is_primitive(v: LatVec) -> bool:
    g = ZERO
    for x in v.coords:
        g = gcd(g, x)
    return is_unit(g)


def orthogonal_short_roots(v: LatVec) -> list[Vec]:
    """Every short root orthogonal to v (a finite, exact enumeration)."""
    _require_negative(v)
    return orthogonal_complement(v).vectors_of_norm(1)


def identify(v: LatVec) -> str | None:
    """Name of the special point a negative vector represents, if any."""
    if v.norm() >= 0 or not is_primitive(v) or orthogonal_short_roots(v):
        return None
    return {-5: "diagonal", -3: "fermat"}.get(v.norm())


# --- gluing ---------------------------------------------------------------


@dataclass
class GluingProfile:
    norm: int
    perp_determinant: int
    line_determinant: int
    perp_order: int
    line_order: int
    perp_norms: list
    line_norms: list
    complementary: bool
    glue_classes: int
    glue_consistent: bool
    glue_norm_sums_integral: bool

    @property
    def ok(self) -> bool:
        return (
            self.perp_order == self.line_order
            and self.complementary
            and self.glue_classes == self.line_order
            and self.glue_consistent
            and self.glue_norm_sums_integral
        )

    def key(self) -> tuple:
        """Invariant part, for comparing Gamma-equivalent vectors."""
        return (self.norm, abs(self.perp_determinant), tuple(self.perp_norms), tuple(self.line_norms))

    def to_json(self) -> dict:
        d = dict(self.__dict__)
        d["perp_norms"] = [str(x) for x in self.perp_norms]
        d["line_norms"] = [str(x) for x in self.line_norms]
        d["ok"] = self.ok
        return d


def gluing_profile(v: LatVec) -> GluingProfile:
    """Discriminant groups of v-perp and <v>, and the gluing map between them.

    The unimodular ambient lattice sits between the orthogonal sum and its
    dual, so each ambient x splits as a + b with a in (v-perp)' and
    b = h(x, v)/N v in <v>', N = h(v, v).  The class of b is h(x, v) mod N,
    and the glue is the map b-class -> a-class.
    """
    _require_negative(v)
    if not is_primitive(v):
        raise ValueError("v is not primitive")
    N = v.norm()
    perp = orthogonal_complement(v)
    dp = disc_group(perp)
    dl = disc_group(((EisInt(N),),))
    pn = dp.norms()
    ln = dl.norms()
    complementary = sorted(frac_mod1(-x) for x in ln) == pn

    # explicit glue from x = r e_j, r over residues mod N
    n = v.frame.n
    seen: dict[tuple, Vec] = {}
    consistent = True
    integral = True
    NE = EisInt(N)
    for j in range(n):
        for r in residues(NE):
            x = tuple(r if t == j else ZERO for t in range(n))
            hx = v.frame.form(x, v.coords)
            cls = _residue(hx, NE)
            # a = x - hx/N v, kept scaled by N to stay integral
            aN = tuple(NE * x[t] - hx * v.coords[t] for t in range(n))
            # norm(a) = norm(x) - |hx|^2 / N, norm(b) = |hx|^2 / N
            na = Fraction(v.frame.norm(x)) - Fraction(hx.norm(), N)
            nb = Fraction(hx.norm(), N)
            if frac_mod1(na + nb) != 0:
                integral = False
            key = (cls.a, cls.b)
            if key in seen:
                diff = tuple(p - q for p, q in zip(aN, seen[key]))
                # same b-class must give a-parts differing by a vector of v-perp
                if not all(_divisible(d, NE) for d in diff):
                    consistent = False
            else:
                seen[key] = aN
    return GluingProfile(
        norm=N,
        perp_determinant=dp.determinant,
        line_determinant=dl.determinant,
        perp_order=dp.order,
        line_order=dl.order,
        perp_norms=pn,
        line_norms=ln,
        complementary=complementary,
        glue_classes=len(seen),
        glue_consistent=consistent,
        glue_norm_sums_integral=integral,
    )


def _residue(x: EisInt, d: EisInt) -> EisInt:
    from .eisenstein import nearest_quotient

    return x - nearest_quotient(x, d) * d


def _divisible(x: EisInt, d: EisInt) -> bool:
    return not _residue(x, d)


# --- isometry search between definite rank-4 lattices -------------------


def _gram_of(frame, vs: Sequence[Vec]) -> Matrix:
    return tuple(tuple(frame.form(vs[j], vs[i]) for j in range(len(vs))) for i in range(len(vs)))


def _find_tuple(
    frame,
    pool: Sequence[Vec],
    target: Matrix,
    budget: int,
) -> tuple[list[Vec] | None, int]:
    """Backtracking search for w_1..w_k in pool with Gram(w) = target."""
    k = len(target)
    nodes = 0
    chosen: list[Vec] = []

    def rec(i: int) -> bool:
        nonlocal nodes
        if i == k:
            return True
        for w in pool:
            nodes += 1
            if nodes > budget:
                raise SearchExhausted
            if frame.norm(w) != target[i][i].a:
                continue
            if all(frame.form(w, chosen[j]) == target[j][i] for j in range(i)):
                chosen.append(w)
                if rec(i + 1):
                    return True
                chosen.pop()
        return False

    found = rec(0)
    return (list(chosen) if found else None), nodes


def _spanning_tuple(L: Sublattice, pool: Sequence[Vec]) -> list[Vec]:
    """First 4 vectors of pool (in order) spanning L over E."""
    det_L = gram_determinant(L)
    chosen: list[Vec] = []

    def rec(start: int) -> bool:
        if len(chosen) == L.rank:
            return gram_determinant(_gram_of(L.ambient, chosen)) == det_L
        for t in range(start, len(pool)):
            chosen.append(pool[t])
            G = _gram_of(L.ambient, chosen)
            if gram_determinant(G) != 0 and rec(t + 1):
                return True
            chosen.pop()
        return False

    if not rec(0):
        raise SearchExhausted("no spanning tuple among the given vectors")
    return chosen


@dataclass
class FermatReport:
    norm: int
    perp_determinant: int
    d4_determinant: int
    counts_perp: dict
    counts_d4: dict
    isometry_found: bool
    isometry_nodes: int
    isometry_status: str
    perp_basis: list = field(default_factory=list)
    d4_images: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (
            self.norm == -3
            and self.perp_determinant == self.d4_determinant == 3
            and self.counts_perp == self.counts_d4
            and self.counts_perp.get(1) == 0
            and self.isometry_found
        )

    def to_json(self) -> dict:
        d = dict(self.__dict__)
        d["counts_perp"] = {str(k): x for k, x in self.counts_perp.items()}
        d["counts_d4"] = {str(k): x for k, x in self.counts_d4.items()}
        d["perp_basis"] = [to_pairs(b) for b in self.perp_basis]
        d["d4_images"] = [to_pairs(b) for b in self.d4_images]
        d["ok"] = self.ok
        return d


def fermat_complement_check(v: LatVec = FERMAT_POINT, budget: int = 200000) -> FermatReport:
    """Compare v-perp with D4(theta) and exhibit an isometry between them."""
    _require_negative(v)
    perp = orthogonal_complement(v)
    D4 = d4_theta()
    counts_p = {t: len(perp.vectors_of_norm(t)) for t in (1, 2, 3)}
    counts_d = {t: len(D4.vectors_of_norm(t)) for t in (1, 2, 3)}
    basis = _spanning_tuple(perp, perp.vectors_of_norm(2))
    target = _gram_of(perp.ambient, basis)
    try:
        images, nodes = _find_tuple(D4.ambient, D4.vectors_of_norm(2), target, budget)
        status = "found" if images else "no isometry among minimal vectors"
    except SearchExhausted:
        images, nodes, status = None, budget, "not found within budget"
    # the images have the right Gram; they span D4(theta) iff the determinant matches
    if images and gram_determinant(_gram_of(D4.ambient, images)) != gram_determinant(D4):
        images, status = None, "image tuple does not span"
    return FermatReport(
        norm=v.norm(),
        perp_determinant=gram_determinant(perp),
        d4_determinant=gram_determinant(D4),
        counts_perp=counts_p,
        counts_d4=counts_d,
        isometry_found=images is not None,
        isometry_nodes=nodes,
        isometry_status=status,
        perp_basis=list(basis),
        d4_images=list(images or []),
    )


@dataclass
class DiagonalReport:
    norm: int
    perp_determinant: int
    long_roots: int
    chain: list
    chain_gram_determinant: int | None
    span_is_perp: bool
    status: str

    @property
    def ok(self) -> bool:
        return (
            self.norm == -5
            and self.perp_determinant == 5
            and self.chain_gram_determinant == 5
            and self.span_is_perp
        )

    def to_json(self) -> dict:
        d = dict(self.__dict__)
        d["chain"] = [to_pairs(c) for c in self.chain]
        d["ok"] = self.ok
        return d


def _a4_target() -> Matrix:
    """Gram of the A4 chain with inner products -1 between neighbours."""
    G = [[ZERO] * 4 for _ in range(4)]
    for i in range(4):
        G[i][i] = EisInt(2)
        if i + 1 < 4:
            G[i][i + 1] = G[i + 1][i] = EisInt(-1)
    return tuple(tuple(r) for r in G)


def diagonal_complement_check(v: LatVec = DIAGONAL_POINT, budget: int = 200000) -> DiagonalReport:
    """Four long roots in v-perp forming an A4 chain that spans v-perp."""
    _require_negative(v)
    perp = orthogonal_complement(v)
    roots = perp.vectors_of_norm(2)
    frame = perp.ambient
    chain = None
    status = "found"
    # neighbours may have any unit inner product; rescale each new root so
    # that it equals -1, which makes the target Gram the real A4 matrix
    nodes = 0
    chosen: list[Vec] = []

    def rec() -> bool:
        nonlocal nodes
        i = len(chosen)
        if i == 4:
            return True
        for w in roots:
            nodes += 1
            if nodes > budget:
                raise SearchExhausted
            if i:
                h = frame.form(w, chosen[i - 1])
                if h.norm() != 1:
                    continue
                # scale w by a unit so that h(w, prev) = -1
                u = -h.conj()
                w = tuple(u * x for x in w)
                if any(frame.form(w, chosen[j]) for j in range(i - 1)):
                    continue
            chosen.append(w)
            if rec():
                return True
            chosen.pop()
        return False

    try:
        if rec():
            chain = list(chosen)
        else:
            status = "no A4 chain among long roots"
    except SearchExhausted:
        status = "not found within budget"
    det_chain = gram_determinant(_gram_of(frame, chain)) if chain else None
    span_is_perp = False
    if chain:
        span = Sublattice(frame, tuple(chain))
        # equal determinants: the transition matrix is unimodular
        span_is_perp = det_chain == gram_determinant(perp) and all(span.contains(b) for b in perp.basis)
    return DiagonalReport(
        norm=v.norm(),
        perp_determinant=gram_determinant(perp),
        long_roots=len(roots),
        chain=chain or [],
        chain_gram_determinant=det_chain,
        span_is_perp=span_is_perp,
        status=status,
    )


# --- order-two isometries -----------------------------------------------


@dataclass
class BiflectionType:
    is_reflection: bool
    fixed_rank: int
    root: Vec | None
    norm: int | None
    long_root: bool

    def to_json(self) -> dict:
        return {
            "is_reflection": self.is_reflection,
            "fixed_rank": self.fixed_rank,
            "root": to_pairs(self.root) if self.root else None,
            "norm": self.norm,
            "long_root": self.long_root,
        }


class NotAReflectionError(ValueError):
    pass


def biflection_transform_type(A: Isometry) -> BiflectionType:
    """Decide whether an involution is a reflection, and in which vector.

    A reflection of a unimodular lattice fixes a rank n-1 sublattice; the -1
    eigenlattice is then spanned by a primitive r, and A is the biflection in
    r, whose norm lies in {+-1, +-2}.
    """
    n = A.frame.n
    I = identity(n)
    if (A @ A).matrix != I:
        raise ValueError("A is not an involution")
    if A.matrix == I or A.matrix == scalar_matrix(-ONE, n):
        raise ValueError("A is +-identity")
    fixed = kernel(mat_sub(A.matrix, I))
    if len(fixed) != n - 1:
        raise NotAReflectionError(f"fixed sublattice has rank {len(fixed)}")
    minus = kernel(mat_sub(A.matrix, scalar_matrix(-ONE, n)))
    assert len(minus) == 1
    r = min((tuple(u * x for x in minus[0]) for u in _units()), key=vec_key)
    rv = LatVec(r, A.frame)
    nr = rv.norm()
    if nr not in (1, -1, 2, -2) or biflection(rv).matrix != A.matrix:
        raise NotAReflectionError("the -1 eigenvector does not define A")
    return BiflectionType(True, len(fixed), r, nr, nr == 2)


def _units():
    from .eisenstein import UNITS

    return UNITS


def central_composite_spinor(r: LatVec) -> int:
    """Spinor norm of (-1) times the biflection in r."""
    g = biflection(r)
    minus = Isometry(scalar_matrix(-ONE, r.frame.n), r.frame, check=False)
    return spinor_norm(reduce_isometry(minus @ g))


# --- sampled orbit evidence ----------------------------------------------


@dataclass
class OrbitSample:
    point: str
    samples: int
    no_short_roots: int
    profile_unchanged: int
    failures: list

    @property
    def ok(self) -> bool:
        return self.no_short_roots == self.samples and self.profile_unchanged == self.samples

    def to_json(self) -> dict:
        d = dict(self.__dict__)
        d["ok"] = self.ok
        return d


def orbit_invariance(v: LatVec, name: str, samples: int = 10, length: int = 6, seed: int = 0) -> OrbitSample:
    """Images of v under random generator words keep the same invariants."""
    from .gamma import random_word

    rng = random.Random(seed)
    base = gluing_profile(v).key()
    ok_roots = ok_prof = 0
    failures = []
    for _ in range(samples):
        w = random_word(rng, rng.randint(1, length))
        g = isometry_hyp_to_diag(w.isometry())
        img = LatVec(g.apply(v.coords), DIAG5)
        if not orthogonal_short_roots(img):
            ok_roots += 1
        else:
            failures.append({"word": str(w), "reason": "short roots in complement"})
        if gluing_profile(img).key() == base:
            ok_prof += 1
        else:
            failures.append({"word": str(w), "reason": "gluing profile changed"})
    return OrbitSample(name, samples, ok_roots, ok_prof, failures)


@dataclass
class TransitivityReport:
    sampled: int
    transported: int
    failures: list

    @property
    def rate(self) -> float:
        return self.transported / self.sampled if self.sampled else 0.0

    @property
    def ok(self) -> bool:
        return self.rate >= 0.95

    def to_json(self) -> dict:
        return {
            "sampled": self.sampled,
            "transported": self.transported,
            "rate": round(self.rate, 6),
            "failures": self.failures,
            "ok": self.ok,
        }


def long_roots_diag(bound: int) -> list[Vec]:
    """Long roots of DIAG5 with norm(v_0) <= bound."""
    from .hermitian import standard_gram

    E4 = standard_gram(4).entries
    out = []
    cache: dict[int, list[Vec]] = {}
    for a in range(-bound - 1, bound + 2):
        for b in range(-bound - 1, bound + 2):
            x = EisInt(a, b)
            m = x.norm()
            if m > bound:
                continue
            if 2 + m not in cache:
                cache[2 + m] = enumerate_gram(E4, 2 + m)
            out.extend((x,) + rest for rest in cache[2 + m])
    out.sort(key=vec_key)
    return out


def long_root_transitivity(samples: int = 50, bound: int = 3, seed: int = 0) -> TransitivityReport:
    """Random long roots of bounded height transported to (1, 1, 0; 0, 0)."""
    from .gamma import LONG_TARGET, orbit_transport

    rng = random.Random(seed)
    pool = long_roots_diag(bound)
    picked = rng.sample(pool, min(samples, len(pool)))
    done = 0
    failures = []
    for r in picked:
        x = diag_to_hyp(LatVec(r, DIAG5)).coords
        res = orbit_transport(x, LONG_TARGET)
        if res.found:
            done += 1
        else:
            failures.append({"root": to_pairs(r), "reason": res.reason})
    return TransitivityReport(len(picked), done, failures)

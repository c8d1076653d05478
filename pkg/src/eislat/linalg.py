"""Linear algebra over the Euclidean domain E.

Hermite and Smith normal forms, saturated kernels, Gram determinants,
discriminant groups with norms mod 1, and exact enumeration of vectors of a
given norm in positive definite hermitian lattices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .eisenstein import ONE, ZERO, EisInt, UNITS, canonical_associate, is_unit, nearest_quotient
from .hermitian import HermGram, LatVec, form
from .matrix import Matrix, Vec, adjugate, det, identity, mat, transpose


class DegenerateError(ValueError):
    """The Gram matrix is singular where a nondegenerate one is required."""


class NotPositiveDefiniteError(ValueError):
    pass


# --- normal forms --------------------------------------------------------


def _row_op(A, U, i, k, q):
    """row_i -= q * row_k in both A and U."""
    Ak, Uk = A[k], U[k]
    A[i] = [x - q * y for x, y in zip(A[i], Ak)]
    U[i] = [x - q * y for x, y in zip(U[i], Uk)]


def hnf(M: Sequence[Sequence[EisInt]]) -> tuple[Matrix, Matrix]:
    """Row Hermite normal form: returns (H, U) with U M = H, U unimodular.

    H is in row echelon form, pivots are canonical associates, and entries
    above a pivot are reduced to the canonical remainder modulo the pivot.
    """
    A = [list(r) for r in mat(M)]
    m = len(A)
    n = len(A[0]) if m else 0
    U = [list(r) for r in identity(m)]
    row = 0
    for col in range(n):
        if row == m:
            break
        while True:
            nz = [i for i in range(row, m) if A[i][col]]
            if not nz:
                break
            p = min(nz, key=lambda i: (A[i][col].norm(), i))
            if p != row:
                A[row], A[p] = A[p], A[row]
                U[row], U[p] = U[p], U[row]
            done = True
            for i in range(row + 1, m):
                if A[i][col]:
                    q = nearest_quotient(A[i][col], A[row][col])
                    _row_op(A, U, i, row, q)
                    if A[i][col]:
                        done = False
            if done:
                break
        if not A[row][col]:
            continue
        piv = A[row][col]
        for u in UNITS:
            if u * piv == canonical_associate(piv):
                A[row] = [u * x for x in A[row]]
                U[row] = [u * x for x in U[row]]
                break
        piv = A[row][col]
        for i in range(row):
            if A[i][col]:
                q = nearest_quotient(A[i][col], piv)
                if q:
                    _row_op(A, U, i, row, q)
        row += 1
    return tuple(tuple(r) for r in A), tuple(tuple(r) for r in U)


def rank(M: Sequence[Sequence[EisInt]]) -> int:
    H, _ = hnf(M)
    return sum(1 for r in H if any(r))


def kernel(M: Sequence[Sequence[EisInt]]) -> list[Vec]:
    """A saturated basis of {x : M x = 0} (x a column vector)."""
    M = mat(M)
    if not M:
        return []
    H, U = hnf(transpose(M))
    return [U[i] for i in range(len(H)) if not any(H[i])]


def smith(M: Sequence[Sequence[EisInt]]) -> tuple[Matrix, Matrix, Matrix]:
    """Smith normal form: returns (D, P, Q) with P M Q = D diagonal,
    d_i | d_{i+1}, and each nonzero d_i a canonical associate."""
    A = [list(r) for r in mat(M)]
    m = len(A)
    n = len(A[0]) if m else 0
    P = [list(r) for r in identity(m)]
    Q = [list(r) for r in identity(n)]

    def col_op(j, k, q):
        # col_j -= q * col_k in A and Q
        for r in A:
            r[j] = r[j] - q * r[k]
        for r in Q:
            r[j] = r[j] - q * r[k]

    def swap_cols(j, k):
        for r in A:
            r[j], r[k] = r[k], r[j]
        for r in Q:
            r[j], r[k] = r[k], r[j]

    for t in range(min(m, n)):
        while True:
            cands = [(A[i][j].norm(), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
            if not cands:
                break
            _, i0, j0 = min(cands)
            if i0 != t:
                A[t], A[i0] = A[i0], A[t]
                P[t], P[i0] = P[i0], P[t]
            if j0 != t:
                swap_cols(t, j0)
            piv = A[t][t]
            clean = True
            for i in range(t + 1, m):
                if A[i][t]:
                    _row_op(A, P, i, t, nearest_quotient(A[i][t], piv))
                    if A[i][t]:
                        clean = False
            for j in range(t + 1, n):
                if A[t][j]:
                    col_op(j, t, nearest_quotient(A[t][j], piv))
                    if A[t][j]:
                        clean = False
            if not clean:
                continue
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if A[i][j] and not _divides(piv, A[i][j]):
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            # pull the offending row into row t and start over
            A[t] = [x + y for x, y in zip(A[t], A[bad])]
            P[t] = [x + y for x, y in zip(P[t], P[bad])]
        if t < m and t < n and A[t][t]:
            piv = A[t][t]
            for u in UNITS:
                if u * piv == canonical_associate(piv):
                    A[t] = [u * x for x in A[t]]
                    P[t] = [u * x for x in P[t]]
                    break
    D = tuple(tuple(r) for r in A)
    return D, tuple(tuple(r) for r in P), tuple(tuple(r) for r in Q)


def _divides(d: EisInt, n: EisInt) -> bool:
    m = n * d.conj()
    N = d.norm()
    return m.a % N == 0 and m.b % N == 0


def elementary_divisors(M: Sequence[Sequence[EisInt]]) -> list[EisInt]:
    D, _, _ = smith(M)
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0))]


def index_of_rows(rows: Sequence[Vec]) -> int:
    """Index [E^n : span(rows)] as a cardinality (product of divisor norms)."""
    divs = elementary_divisors(rows)
    out = 1
    for d in divs:
        if not d:
            raise DegenerateError("rows do not span a full-rank sublattice")
        out *= d.norm()
    if len(divs) < len(rows[0]):
        raise DegenerateError("rows do not span a full-rank sublattice")
    return out


# --- sublattices ---------------------------------------------------------


@dataclass(frozen=True)
class Sublattice:
    """An E-span of independent vectors inside a hermitian ambient lattice."""

    ambient: HermGram
    basis: tuple[Vec, ...]

    def __post_init__(self) -> None:
        basis = tuple(tuple(EisInt.coerce(x) for x in b) for b in self.basis)
        object.__setattr__(self, "basis", basis)
        if basis and rank(basis) != len(basis):
            raise ValueError("sublattice basis is not E-linearly independent")

    @property
    def rank(self) -> int:
        return len(self.basis)

    def gram(self) -> Matrix:
        """G[i][j] = h(b_j, b_i)."""
        A = self.ambient.entries
        B = self.basis
        return tuple(tuple(form(A, B[j], B[i]) for j in range(len(B))) for i in range(len(B)))

    def as_gram(self, name: str = "") -> HermGram:
        return HermGram(self.gram(), name)

    def embed(self, coeffs: Sequence[EisInt]) -> Vec:
        """Ambient coordinates of sum c_i b_i."""
        n = self.ambient.n
        out = [ZERO] * n
        for c, b in zip(coeffs, self.basis):
            if c:
                for t in range(n):
                    if b[t]:
                        out[t] = out[t] + c * b[t]
        return tuple(out)

    def coordinates(self, x: Sequence[EisInt]) -> Vec | None:
        """Coefficients of x in this basis, or None if x is not in the span over E."""
        k = len(self.basis)
        rows = [list(b) for b in self.basis] + [[-t for t in x]]
        # find integral relation with last coefficient a unit
        for rel in kernel(transpose(mat(rows))):
            last = rel[k]
            if is_unit(last):
                inv = last.conj()
                return tuple(inv * c for c in rel[:k])
        if not any(x):
            return tuple(ZERO for _ in range(k))
        return None

    def contains(self, x: Sequence[EisInt]) -> bool:
        return self.coordinates(x) is not None

    def saturation(self) -> "Sublattice":
        """(span of basis tensor Q) intersected with the ambient E^n."""
        # vectors killed by every functional that kills the span
        perp = kernel(self.basis)  # x with <basis rows, x>_bilinear = 0
        if not perp:
            return Sublattice(self.ambient, tuple(identity(self.ambient.n)))
        return Sublattice(self.ambient, tuple(kernel(perp)))

    def vectors_of_norm(self, t: int) -> list[Vec]:
        coeffs = enumerate_gram(self.gram(), t)
        return sorted((self.embed(c) for c in coeffs), key=vec_key)


def vec_key(v: Sequence[EisInt]) -> tuple:
    return tuple(p for x in v for p in (x.a, x.b))


def orthogonal_complement(v: LatVec) -> Sublattice:
    """Saturated basis of {x : h(x, v) = 0}."""
    if v.is_zero():
        raise ValueError("orthogonal complement of the zero vector")
    A = v.frame.entries
    n = v.frame.n
    row = tuple(form(A, tuple(ONE if t == j else ZERO for t in range(n)), v.coords) for j in range(n))
    return Sublattice(v.frame, tuple(kernel((row,))))


def gram_determinant(L: Sublattice | HermGram | Matrix) -> int:
    if isinstance(L, Sublattice):
        G = L.gram()
    elif isinstance(L, HermGram):
        G = L.entries
    else:
        G = mat(L)
    d = det(G)
    assert d.b == 0, "hermitian determinant must be rational"
    return d.a


# --- discriminant groups -------------------------------------------------


def residues(d: EisInt) -> list[EisInt]:
    """Canonical representatives of E / dE (one per class, sorted)."""
    d = EisInt.coerce(d)
    N = d.norm()
    if N == 0:
        raise DegenerateError("E/0 is infinite")
    reps = set()
    for a in range(N):
        for b in range(N):
            x = EisInt(a, b)
            reps.add(x - nearest_quotient(x, d) * d)
            if len(reps) == N:
                return sorted(reps, key=lambda z: (z.a, z.b))
    return sorted(reps, key=lambda z: (z.a, z.b))


def frac_mod1(x: Fraction) -> Fraction:
    return x - (x.numerator // x.denominator)


@dataclass(frozen=True)
class DiscGroup:
    """L'/L with the induced Q/Z-valued norm."""

    divisors: tuple[EisInt, ...]
    determinant: int
    elements: tuple[tuple[Vec, Fraction], ...]

    @property
    def order(self) -> int:
        """Cardinality of L'/L (the norm of the determinant)."""
        return len(self.elements)

    def norms(self) -> list[Fraction]:
        return sorted(n for _, n in self.elements)

    def nontrivial_divisors(self) -> list[EisInt]:
        return [d for d in self.divisors if not is_unit(d)]


def hermitian_quadratic(G: Matrix, u: Sequence[EisInt]) -> Fraction:
    """u^* G^{-1} u as an exact rational."""
    d = det(G)
    if not d:
        raise DegenerateError("degenerate Gram matrix")
    assert d.b == 0
    adj = adjugate(G)
    s = form(adj, u, u)
    assert s.b == 0
    return Fraction(s.a, d.a)


def disc_group(L: Sublattice | HermGram | Matrix) -> DiscGroup:
    """Discriminant group of a nondegenerate lattice, with norms mod 1."""
    if isinstance(L, Sublattice):
        G = L.gram()
    elif isinstance(L, HermGram):
        G = L.entries
    else:
        G = mat(L)
    dG = det(G)
    if not dG:
        raise DegenerateError("degenerate Gram matrix")
    D, P, _ = smith(G)
    r = len(G)
    divisors = tuple(D[i][i] for i in range(r))
    # u ~ u' iff P(u - u') in D E^r; so u = P^{-1} w with w over residues
    Pinv = _unimodular_inverse(P)
    ranges = [residues(d) if not is_unit(d) else [ZERO] for d in divisors]
    adj = adjugate(G)
    elements = []
    for w in itertools.product(*ranges):
        u = tuple(sum((Pinv[i][j] * w[j] for j in range(r)), ZERO) for i in range(r))
        s = form(adj, u, u)
        elements.append((u, frac_mod1(Fraction(s.a, dG.a))))
    return DiscGroup(divisors, dG.a, tuple(elements))


def _unimodular_inverse(P: Matrix) -> Matrix:
    d = det(P)
    if not is_unit(d):
        raise ValueError("matrix is not unimodular")
    dinv = d.conj()
    return tuple(tuple(x * dinv for x in row) for row in adjugate(P))


# --- real forms, inertia, enumeration -----------------------------------


def real_form(G: Sequence[Sequence[EisInt]]) -> list[list[Fraction]]:
    """Symmetric rational S with c^* G c = z^T S z, z = (a_1, b_1, ..., a_r, b_r)."""
    G = mat(G)
    r = len(G)
    m = 2 * r
    basis = []
    for i in range(r):
        for part in (ONE, EisInt(0, 1)):
            basis.append(tuple(part if t == i else ZERO for t in range(r)))

    def q(c):
        x = form(G, c, c)
        return x.a

    diag = [q(e) for e in basis]
    S = [[Fraction(0)] * m for _ in range(m)]
    for p in range(m):
        S[p][p] = Fraction(diag[p])
        for s in range(p + 1, m):
            both = tuple(x + y for x, y in zip(basis[p], basis[s]))
            val = Fraction(q(both) - diag[p] - diag[s], 2)
            S[p][s] = S[s][p] = val
    return S


def leading_minors(S: Sequence[Sequence[Fraction]]) -> list[Fraction]:
    out = []
    for k in range(1, len(S) + 1):
        out.append(_rational_det([row[:k] for row in S[:k]]))
    return out


def _rational_det(A) -> Fraction:
    A = [[Fraction(x) for x in r] for r in A]
    n = len(A)
    d = Fraction(1)
    for k in range(n):
        p = next((i for i in range(k, n) if A[i][k] != 0), None)
        if p is None:
            return Fraction(0)
        if p != k:
            A[k], A[p] = A[p], A[k]
            d = -d
        d *= A[k][k]
        for i in range(k + 1, n):
            f = A[i][k] / A[k][k]
            if f:
                A[i] = [x - f * y for x, y in zip(A[i], A[k])]
    return d


def is_positive_definite(G: Sequence[Sequence[EisInt]]) -> bool:
    """Exact test via leading principal minors of the real 2r x 2r form."""
    return all(m > 0 for m in leading_minors(real_form(G)))


def symmetric_inertia(S: Sequence[Sequence[Fraction]]) -> tuple[int, int, int]:
    """(n_plus, n_minus, n_zero) of a rational symmetric matrix, exactly."""
    A = [[Fraction(x) for x in r] for r in S]
    n = len(A)
    pos = neg = 0
    active = list(range(n))
    while active:
        k = next((i for i in active if A[i][i] != 0), None)
        if k is None:
            pair = next(((i, j) for i in active for j in active if i != j and A[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            # congruence: replace e_i by e_i + e_j, making A[i][i] = 2 A[i][j] != 0
            for t in range(n):
                A[i][t] += A[j][t]
            for t in range(n):
                A[t][i] += A[t][j]
            k = i
        piv = A[k][k]
        if piv > 0:
            pos += 1
        else:
            neg += 1
        active.remove(k)
        for i in active:
            f = A[i][k] / piv
            if f:
                for t in active:
                    A[i][t] -= f * A[k][t]
        for i in active:
            A[i][k] = A[k][i] = Fraction(0)
    return pos, neg, n - pos - neg


def hermitian_inertia(G: Sequence[Sequence[EisInt]]) -> tuple[int, int, int]:
    """Signature of a hermitian matrix over E (complex dimensions)."""
    p, n, z = symmetric_inertia(real_form(G))
    return p // 2, n // 2, z // 2


def _ldl(S):
    m = len(S)
    Q = [[Fraction(x) for x in r] for r in S]
    for i in range(m):
        if Q[i][i] <= 0:
            raise NotPositiveDefiniteError("form is not positive definite")
        for j in range(i + 1, m):
            Q[j][i] = Q[i][j]
            Q[i][j] = Q[i][j] / Q[i][i]
        for k in range(i + 1, m):
            for l in range(k, m):
                Q[k][l] -= Q[k][i] * Q[i][l]
    d = [Q[i][i] for i in range(m)]
    mu = [[Q[i][j] if j > i else Fraction(0) for j in range(m)] for i in range(m)]
    return d, mu


def enumerate_gram(G: Sequence[Sequence[EisInt]], t: int, at_most: bool = False) -> list[Vec]:
    """All coefficient vectors c in E^r with c^* G c == t (or <= t), exactly.

    Fincke-Pohst style: q(z) = sum_i d_i (z_i + sum_{j>i} mu_ij z_j)^2 with an
    exact rational decomposition; each coordinate range is found by walking
    outward from the rounded center while the exact bound holds.
    """
    G = mat(G)
    if not is_positive_definite(G):
        raise NotPositiveDefiniteError("enumeration needs a positive definite Gram matrix")
    S = real_form(G)
    d, mu = _ldl(S)
    m = len(S)
    r = m // 2
    T = Fraction(t)
    out: list[Vec] = []
    z = [0] * m

    def rec(i: int, budget: Fraction) -> None:
        c = -sum((mu[i][j] * z[j] for j in range(i + 1, m)), Fraction(0))
        di = d[i]
        start = round(c)
        for direction in (1, -1):
            x = start if direction == 1 else start - 1
            while True:
                used = di * (x - c) ** 2
                if used > budget:
                    break
                z[i] = x
                rest = budget - used
                if i == 0:
                    if at_most or rest == 0:
                        out.append(tuple(EisInt(z[2 * k], z[2 * k + 1]) for k in range(r)))
                else:
                    rec(i - 1, rest)
                x += direction
        z[i] = 0

    rec(m - 1, T)
    # exact re-verification in E
    verified = []
    for c in out:
        val = form(G, c, c)
        assert val.b == 0
        if (val.a <= t if at_most else val.a == t) and (at_most or any(c) or t == 0):
            verified.append(c)
    verified.sort(key=vec_key)
    return verified


def enumerate_norm(L: Sublattice | HermGram, t: int) -> list[Vec]:
    """Vectors of hermitian norm exactly t; ambient coordinates for a Sublattice."""
    if t <= 0:
        raise ValueError("enumerate_norm needs a positive norm")
    if isinstance(L, Sublattice):
        return L.vectors_of_norm(t)
    return enumerate_gram(L.entries, t)


def brute_force_norm(G: Sequence[Sequence[EisInt]], t: int, box: int) -> list[Vec]:
    """Naive oracle: every coefficient vector with components in a box."""
    G = mat(G)
    r = len(G)
    rng = range(-box, box + 1)
    out = []
    for coords in itertools.product(rng, repeat=2 * r):
        c = tuple(EisInt(coords[2 * k], coords[2 * k + 1]) for k in range(r))
        v = form(G, c, c)
        if v.b == 0 and v.a == t:
            out.append(c)
    out.sort(key=vec_key)
    return out

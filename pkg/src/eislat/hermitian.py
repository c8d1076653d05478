"""Hermitian lattices over E: Gram forms, complex reflections, Heisenberg
translations, heights, and the two standard coordinate frames.

Conventions.  A Gram matrix A defines h(v, w) = w^* A v, so h is linear in
its first slot and conjugate-linear in its second, and A[i][j] = h(e_j, e_i).
Vectors are column vectors; an isometry M satisfies M^* A M = A.

Two frames for the rank-5 lattice of signature (4, 1):

* ``DIAG5``: h(x, y) = -x0 y0bar + x1 y1bar + ... + x4 y4bar.
* ``HYP5``: identity on the first three coordinates and the hyperbolic cell
  [[0, 1], [1, 0]] on the last two, written (lambda; mu, nu).  The distinguished
  null vector is rho = (0, 0, 0; 0, 1) and the height of v is h(v, rho) = mu.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

import sympy

from .eisenstein import ONE, ZERO, EisInt, OMEGA, OMEGA_BAR, UNITS, is_unit
from .matrix import (
    Matrix,
    Vec,
    adjugate,
    conj_transpose,
    det,
    diagonal,
    identity,
    is_identity,
    mat,
    mat_mul,
    mat_vec,
    vec,
)


class FrameError(ValueError):
    """Vectors or maps from different Gram frames were combined."""


class NotIntegralError(ArithmeticError):
    """A construction would leave the lattice (non-integral entries)."""


class ParityError(ValueError):
    """Translation parameters violate z - <lambda|lambda>/2 in E."""


@dataclass(frozen=True)
class HermGram:
    """A hermitian Gram matrix over E."""

    entries: Matrix
    name: str = ""

    def __post_init__(self) -> None:
        A = mat(self.entries)
        object.__setattr__(self, "entries", A)
        n = len(A)
        if any(len(r) != n for r in A):
            raise ValueError("Gram matrix must be square")
        for i in range(n):
            for j in range(n):
                if A[i][j] != A[j][i].conj():
                    raise ValueError(f"Gram matrix is not hermitian at ({i}, {j})")

    @property
    def n(self) -> int:
        return len(self.entries)

    def form(self, v: Sequence[EisInt], w: Sequence[EisInt]) -> EisInt:
        """h(v, w) = w^* A v on raw coordinate tuples."""
        return form(self.entries, vec(v), vec(w))

    def norm(self, v: Sequence[EisInt]) -> int:
        v = vec(v)
        x = form(self.entries, v, v)
        assert x.b == 0
        return x.a

    def vector(self, coords: Iterable) -> "LatVec":
        return LatVec(vec(coords), self)

    def determinant(self) -> int:
        d = det(self.entries)
        assert d.b == 0, "hermitian determinant must be rational"
        return d.a

    def inverse(self) -> Matrix:
        return _gram_inverse(self.entries, self.name)

    def __repr__(self) -> str:
        return f"HermGram({self.name or self.n})"


@lru_cache(maxsize=64)
def _gram_inverse(entries: Matrix, name: str) -> Matrix:
    d = det(entries)
    if not is_unit(d):
        raise NotIntegralError(f"{name or 'Gram'} is not unimodular")
    dinv = d.conj()  # unit inverse
    return tuple(tuple(x * dinv for x in r) for r in adjugate(entries))


def form(A: Matrix, v: Sequence[EisInt], w: Sequence[EisInt]) -> EisInt:
    s = ZERO
    n = len(A)
    for i in range(n):
        wi = w[i]
        if not wi:
            continue
        row = A[i]
        t = ZERO
        for j in range(n):
            if row[j] and v[j]:
                t = t + row[j] * v[j]
        if t:
            s = s + wi.conj() * t
    return s


DIAG5 = HermGram(diagonal([-1, 1, 1, 1, 1]), "DIAG5")
HYP5 = HermGram(
    mat(
        [
            [1, 0, 0, 0, 0],
            [0, 1, 0, 0, 0],
            [0, 0, 1, 0, 0],
            [0, 0, 0, 0, 1],
            [0, 0, 0, 1, 0],
        ]
    ),
    "HYP5",
)


def standard_gram(n: int, name: str = "") -> HermGram:
    """The positive definite unimodular lattice E^n."""
    return HermGram(identity(n), name or f"E{n}")


@dataclass(frozen=True)
class LatVec:
    coords: Vec
    frame: HermGram = field(repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", vec(self.coords))
        if len(self.coords) != self.frame.n:
            raise FrameError(f"vector of length {len(self.coords)} in a rank-{self.frame.n} frame")

    def __getitem__(self, i: int) -> EisInt:
        return self.coords[i]

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __add__(self, other: "LatVec") -> "LatVec":
        _same_frame(self, other)
        return LatVec(tuple(x + y for x, y in zip(self.coords, other.coords)), self.frame)

    def __sub__(self, other: "LatVec") -> "LatVec":
        _same_frame(self, other)
        return LatVec(tuple(x - y for x, y in zip(self.coords, other.coords)), self.frame)

    def __neg__(self) -> "LatVec":
        return LatVec(tuple(-x for x in self.coords), self.frame)

    def scale(self, c) -> "LatVec":
        c = EisInt.coerce(c)
        return LatVec(tuple(c * x for x in self.coords), self.frame)

    def norm(self) -> int:
        return self.frame.norm(self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __str__(self) -> str:
        return "(" + ", ".join(str(x) for x in self.coords) + ")"


def same_frame(a: HermGram, b: HermGram) -> bool:
    return a is b or a.entries == b.entries


def _same_frame(*objs) -> HermGram:
    first = objs[0].frame
    for o in objs[1:]:
        if not same_frame(first, o.frame):
            names = ", ".join(repr(x.frame) for x in objs)
            raise FrameError(f"frame mismatch: {names}")
    return first


def inner(v: LatVec, w: LatVec) -> EisInt:
    """h(v, w) = w^* A v."""
    A = _same_frame(v, w)
    return form(A.entries, v.coords, w.coords)


@dataclass(frozen=True)
class Isometry:
    """A Gram-preserving matrix; construction verifies M^* A M = A exactly."""

    matrix: Matrix
    frame: HermGram = field(repr=False)
    check: bool = field(default=True, repr=False, compare=False)

    def __post_init__(self) -> None:
        M = mat(self.matrix)
        object.__setattr__(self, "matrix", M)
        if self.check and not preserves(M, self.frame.entries):
            raise NotIntegralError("matrix does not preserve the Gram form")

    def __matmul__(self, other: "Isometry") -> "Isometry":
        _same_frame(self, other)
        return Isometry(mat_mul(self.matrix, other.matrix), self.frame, check=False)

    def __call__(self, v: LatVec) -> LatVec:
        _same_frame(self, v)
        return LatVec(mat_vec(self.matrix, v.coords), self.frame)

    def apply(self, coords: Sequence[EisInt]) -> Vec:
        return mat_vec(self.matrix, coords)

    def inverse(self) -> "Isometry":
        # M^{-1} = A^{-1} M^* A
        A = self.frame.entries
        Ainv = self.frame.inverse()
        return Isometry(mat_mul(Ainv, mat_mul(conj_transpose(self.matrix), A)), self.frame, check=False)

    def __pow__(self, k: int) -> "Isometry":
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = Isometry(identity(self.frame.n), self.frame, check=False)
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def is_identity(self) -> bool:
        return is_identity(self.matrix)

    def order(self, limit: int = 64) -> int | None:
        from .matrix import matrix_order

        return matrix_order(self.matrix, limit)


def preserves(M: Matrix, A: Matrix) -> bool:
    return mat_mul(conj_transpose(M), mat_mul(A, M)) == A


def identity_isometry(frame: HermGram) -> Isometry:
    return Isometry(identity(frame.n), frame, check=False)


def scalar_isometry(u: EisInt, frame: HermGram) -> Isometry:
    u = EisInt.coerce(u)
    if not is_unit(u):
        raise NotIntegralError(f"scalar {u} is not a unit")
    return Isometry(diagonal([u] * frame.n), frame, check=False)


# --- complex reflections -------------------------------------------------


def reflection_matrix(A: Matrix, v: Sequence[EisInt], zeta: EisInt) -> Matrix:
    """Matrix of x -> x - (1 - zeta) h(x, v) / h(v, v) v."""
    v = vec(v)
    zeta = EisInt.coerce(zeta)
    nv = form(A, v, v)
    if not nv:
        raise ValueError("cannot reflect in an isotropic vector")
    assert nv.b == 0
    n = nv.a
    c = ONE - zeta
    n_dim = len(A)
    # row vector v^* A: (v^*A)_j = h(e_j, v)
    w = [ZERO] * n_dim
    for j in range(n_dim):
        s = ZERO
        for k in range(n_dim):
            if v[k] and A[k][j]:
                s = s + v[k].conj() * A[k][j]
        w[j] = s
    rows = []
    for i in range(n_dim):
        row = []
        ci = c * v[i]
        for j in range(n_dim):
            num = ci * w[j]
            if num.a % n or num.b % n:
                raise NotIntegralError(
                    f"reflection of order {_unit_order(zeta)} in a vector of norm {n} is not integral"
                )
            entry = EisInt(num.a // n, num.b // n)
            row.append((ONE - entry) if i == j else -entry)
        rows.append(tuple(row))
    return tuple(rows)


def _unit_order(zeta: EisInt) -> int:
    for k in range(1, 7):
        p = ONE
        for _ in range(k):
            p = p * zeta
        if p == ONE:
            return k
    return 0


def zeta_reflection(v: LatVec, zeta) -> Isometry:
    """The zeta-reflection in v: multiplies v by zeta and fixes v-perp."""
    zeta = EisInt.coerce(zeta)
    if not is_unit(zeta):
        raise ValueError(f"{zeta} is not a root of unity in E")
    M = reflection_matrix(v.frame.entries, v.coords, zeta)
    return Isometry(M, v.frame, check=False)


HEX = UNITS[1]  # -w
TRI = OMEGA
BI = EisInt(-1, 0)


def hexflection(v: LatVec) -> Isometry:
    return zeta_reflection(v, HEX)


def triflection(v: LatVec) -> Isometry:
    return zeta_reflection(v, TRI)


def biflection(v: LatVec) -> Isometry:
    return zeta_reflection(v, BI)


# --- the hyperbolic frame ------------------------------------------------

RHO = HYP5.vector([0, 0, 0, 0, 1])


def height(v: LatVec) -> EisInt:
    """h(v, rho), i.e. the second-to-last coordinate in the HYP5 frame."""
    if not same_frame(v.frame, HYP5):
        raise FrameError("height is defined in the HYP5 frame")
    return v.coords[3]


@dataclass(frozen=True)
class TranslationParams:
    """Parameters of T_{lambda, z} with z = k * theta / 2."""

    lam: Vec
    k: int

    def __post_init__(self) -> None:
        lam = vec(self.lam)
        if len(lam) != 3:
            raise ValueError("lambda must have three coordinates")
        object.__setattr__(self, "lam", lam)
        if (self.k - self.lam_norm()) % 2:
            raise ParityError(
                f"z = {self.k}*theta/2 with <lambda|lambda> = {self.lam_norm()}: z - lambda^2/2 is not in E"
            )

    def lam_norm(self) -> int:
        return sum(x.norm() for x in self.lam)

    def corner(self) -> EisInt:
        """z - <lambda|lambda>/2 as an element of E."""
        # (k*theta - n)/2 = ((k - n) + 2k w)/2
        return EisInt((self.k - self.lam_norm()) // 2, self.k)

    def inverse(self) -> "TranslationParams":
        return TranslationParams(tuple(-x for x in self.lam), -self.k)


def translation(p: TranslationParams) -> Isometry:
    """T_{lambda,z} in the HYP5 frame; fixes rho."""
    lam = p.lam
    rows = []
    for i in range(3):
        rows.append(tuple([ONE if j == i else ZERO for j in range(3)] + [lam[i], ZERO]))
    rows.append((ZERO, ZERO, ZERO, ONE, ZERO))
    rows.append(tuple([-x.conj() for x in lam] + [p.corner(), ONE]))
    return Isometry(tuple(rows), HYP5, check=False)


def translation_params_of(M: Isometry | Matrix) -> TranslationParams | None:
    """Recover (lambda, k) if M has the shape of a translation, else None."""
    m = M.matrix if isinstance(M, Isometry) else M
    lam = (m[0][3], m[1][3], m[2][3])
    candidate_corner = m[4][3]
    k = candidate_corner.b
    try:
        p = TranslationParams(lam, k)
    except ParityError:
        return None
    if translation(p).matrix != mat(m):
        return None
    return p


def im_part_k(x: EisInt) -> int:
    """The integer j with Im(x) = j * theta / 2 (Im taken as (x - xbar)/2)."""
    return x.b


def heisenberg_product(p: TranslationParams, q: TranslationParams) -> TranslationParams:
    """Parameters of T_p T_q predicted by the Heisenberg composition law.

    With <a|b> = sum a_i conj(b_i), the matrices compose as
    z'' = z + z' + Im <lambda|lambda'>; this is the ordering that is
    consistent with the commutator law [T, T'] = T_{0, 2 Im <lambda|lambda'>}.
    """
    lam = tuple(x + y for x, y in zip(p.lam, q.lam))
    return TranslationParams(lam, p.k + q.k + im_part_k(lam_inner(p.lam, q.lam)))


def lam_inner(a: Sequence[EisInt], b: Sequence[EisInt]) -> EisInt:
    """<a|b> = sum a_i conj(b_i) on the E^3 part."""
    s = ZERO
    for x, y in zip(a, b):
        s = s + x * y.conj()
    return s


def heisenberg_commutator(p: TranslationParams, q: TranslationParams) -> TranslationParams:
    """Parameters of [T_p, T_q] = T_{0, 2 Im <lambda|lambda'>}."""
    return TranslationParams((ZERO, ZERO, ZERO), 2 * im_part_k(lam_inner(p.lam, q.lam)))


# Roots of the affine E6 configuration in the HYP5 frame.
ROOTS = {
    1: HYP5.vector([1, 0, 0, 0, 0]),
    2: HYP5.vector([1, 0, 0, 0, 1]),
    3: HYP5.vector([0, 0, 0, 1, EisInt(0, -1)]),
    4: HYP5.vector([0, 1, 0, 0, 1]),
    5: HYP5.vector([0, 1, 0, 0, 0]),
    6: HYP5.vector([0, 0, 1, 0, 1]),
    7: HYP5.vector([0, 0, 1, 0, 0]),
}

# Edges of the affine E6 diagram: r1-r2-r3-r4-r5 with the r3-r6-r7 limb.
E6_AFFINE_EDGES = frozenset({(1, 2), (2, 3), (3, 4), (4, 5), (3, 6), (6, 7)})


def adjacent(i: int, j: int) -> bool:
    return (min(i, j), max(i, j)) in E6_AFFINE_EDGES


# --- base change between the two frames ----------------------------------


def base_change_hyp_to_diag() -> Matrix:
    """M with M^* DIAG5 M = HYP5; columns are the images of the HYP5 basis.

    lambda_1..3 go to the positive coordinates 1..3.  The hyperbolic cell uses
    f1 = e4 + e0 and f2 = -wbar e4 + w e0, which have Gram [[0, 1], [1, 0]].
    """
    M = [[ZERO] * 5 for _ in range(5)]
    M[1][0] = ONE
    M[2][1] = ONE
    M[3][2] = ONE
    # column 3 (mu):  e4 + e0
    M[4][3] = ONE
    M[0][3] = ONE
    # column 4 (nu): -wbar e4 + w e0
    M[4][4] = -OMEGA_BAR
    M[0][4] = OMEGA
    return tuple(tuple(r) for r in M)


def base_change_diag_to_hyp() -> Matrix:
    M = base_change_hyp_to_diag()
    # M^{-1} = HYP5^{-1} M^* DIAG5 and HYP5, DIAG5 are involutions
    return mat_mul(HYP5.entries, mat_mul(conj_transpose(M), DIAG5.entries))


def hyp_to_diag(v: LatVec) -> LatVec:
    if not same_frame(v.frame, HYP5):
        raise FrameError("expected a HYP5 vector")
    return LatVec(mat_vec(base_change_hyp_to_diag(), v.coords), DIAG5)


def diag_to_hyp(v: LatVec) -> LatVec:
    if not same_frame(v.frame, DIAG5):
        raise FrameError("expected a DIAG5 vector")
    return LatVec(mat_vec(base_change_diag_to_hyp(), v.coords), HYP5)


def isometry_hyp_to_diag(g: Isometry) -> Isometry:
    if not same_frame(g.frame, HYP5):
        raise FrameError("expected a HYP5 isometry")
    M = base_change_hyp_to_diag()
    return Isometry(mat_mul(M, mat_mul(g.matrix, base_change_diag_to_hyp())), DIAG5)


def isometry_diag_to_hyp(g: Isometry) -> Isometry:
    if not same_frame(g.frame, DIAG5):
        raise FrameError("expected a DIAG5 isometry")
    M = base_change_hyp_to_diag()
    return Isometry(mat_mul(base_change_diag_to_hyp(), mat_mul(g.matrix, M)), HYP5)


# --- symplectic <-> hermitian --------------------------------------------


def _int_matrix(M) -> list[list[int]]:
    return [[int(x) for x in row] for row in M]


def _int_mul(A, B):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


def _bilinear(Om, x, y) -> int:
    return sum(x[i] * Om[i][j] * y[j] for i in range(len(x)) for j in range(len(y)) if x[i] and y[j])


def check_symplectic_pair(Omega, sigma) -> None:
    """Raise ValueError unless Omega is unimodular antisymmetric and sigma is an
    order-3 isometry of it without fixed vectors."""
    Om, S = _int_matrix(Omega), _int_matrix(sigma)
    m = len(Om)
    if m % 2 or any(len(r) != m for r in Om) or len(S) != m:
        raise ValueError("Omega and sigma must be square of even size")
    if any(Om[i][j] != -Om[j][i] for i in range(m) for j in range(m)):
        raise ValueError("Omega is not antisymmetric")
    if abs(sympy.Matrix(Om).det()) != 1:
        raise ValueError("Omega is not unimodular")
    S2 = _int_mul(S, S)
    if any(S2[i][j] + S[i][j] + (1 if i == j else 0) for i in range(m) for j in range(m)):
        raise ValueError("sigma does not satisfy sigma^2 + sigma + 1 = 0")
    St = [list(r) for r in zip(*S)]
    if _int_mul(St, _int_mul(Om, S)) != Om:
        raise ValueError("sigma does not preserve Omega")


def _apply_int(S, x):
    return [sum(S[i][j] * x[j] for j in range(len(x))) for i in range(len(S))]


def symplectic_hermitian_value(Omega, sigma, x, y) -> EisInt:
    """h(x, y) = -(Omega(theta x, y) + theta Omega(x, y)) / 2, theta x = (sigma - sigma^-1) x."""
    S = _int_matrix(sigma)
    Sx = _apply_int(S, x)
    # sigma^-1 = sigma^2 = -sigma - 1, so (sigma - sigma^-1) x = 2 sigma x + x
    tx = [2 * a + b for a, b in zip(Sx, x)]
    p = -_bilinear(Omega, tx, y)
    q = -_bilinear(Omega, x, y)
    if (p - q) % 2:
        raise NotIntegralError("h(x, y) is not in E")  # cannot happen for valid input
    # (p + q theta)/2 = ((p + q) + 2 q w)/2
    return EisInt((p + q) // 2, q)


def eisenstein_basis(sigma) -> list[list[int]]:
    """An E-basis x_1..x_n of Z^{2n}, where w acts as sigma.

    Returns integer vectors; {x_i, sigma x_i} is then a Z-basis.
    """
    from .linalg import hnf

    S = _int_matrix(sigma)
    m = len(S)
    n = m // 2
    chosen: list[list[int]] = []
    cols: list[list[int]] = []
    for j in range(m):
        e = [1 if i == j else 0 for i in range(m)]
        trial = cols + [e, _apply_int(S, e)]
        if sympy.Matrix(trial).T.rank() == len(trial):
            chosen.append(e)
            cols = trial
        if len(chosen) == n:
            break
    B = sympy.Matrix(cols).T  # columns x1, s x1, x2, s x2, ...
    Binv = B.inv()
    # coordinates of each standard vector in the rational E-basis
    coeffs = []
    for j in range(m):
        c = Binv[:, j]
        coeffs.append([(c[2 * i], c[2 * i + 1]) for i in range(n)])
    D = sympy.ilcm(*[sympy.fraction(x)[1] for row in coeffs for pair in row for x in pair]) or 1
    D = int(D)
    rows = [tuple(EisInt(int(a * D), int(b * D)) for a, b in row) for row in coeffs]
    H, _ = hnf(tuple(rows))
    H = [r for r in H if any(r)]
    assert len(H) == n
    basis = []
    for r in H:
        x = [0] * m
        for i, c in enumerate(r):
            xi = chosen[i]
            sxi = _apply_int(S, xi)
            for t in range(m):
                x[t] += c.a * xi[t] + c.b * sxi[t]
        if any(t % D for t in x):
            raise AssertionError("E-basis construction left the lattice")
        basis.append([t // D for t in x])
    return basis


def hermitian_from_symplectic(Omega, sigma, basis=None) -> HermGram:
    """The E-valued hermitian form attached to (Omega, sigma), as a Gram matrix
    on an E-basis (computed by ``eisenstein_basis`` unless given)."""
    check_symplectic_pair(Omega, sigma)
    if basis is None:
        basis = eisenstein_basis(sigma)
    n = len(basis)
    if 2 * n != len(_int_matrix(Omega)):
        raise ValueError("basis has the wrong size")
    entries = tuple(
        tuple(symplectic_hermitian_value(Omega, sigma, basis[j], basis[i]) for j in range(n)) for i in range(n)
    )
    G = HermGram(entries, "from-symplectic")
    if not is_unit(det(G.entries)):
        raise NotIntegralError("resulting hermitian form is not unimodular (bad basis?)")
    return G


OMEGA_ACTION = ((0, -1), (1, -1))  # multiplication by w on (a, b) = a + b w


def symplectic_from_hermitian(G: HermGram) -> tuple[list[list[int]], list[list[int]]]:
    """(Omega, sigma) on Z^{2n} with Omega(x, y) = (h(y, x) - h(x, y)) / theta.

    Coordinates: x = sum (a_i + b_i w) e_i is stored as (a_1, b_1, ..., a_n, b_n).
    """
    n = G.n
    m = 2 * n
    sigma = [[0] * m for _ in range(m)]
    for i in range(n):
        for r in range(2):
            for c in range(2):
                sigma[2 * i + r][2 * i + c] = OMEGA_ACTION[r][c]

    def elem(p: int) -> Vec:
        i, part = divmod(p, 2)
        return tuple((ONE if part == 0 else OMEGA) if t == i else ZERO for t in range(n))

    Om = [[0] * m for _ in range(m)]
    for p in range(m):
        for q in range(m):
            hxy = G.form(elem(p), elem(q))
            # h - conj(h) = b * theta, and Omega = (conj(h) - h) / theta
            Om[p][q] = -hxy.b
    return Om, sigma


def standard_eisenstein_basis(n: int) -> list[list[int]]:
    return [[1 if t == 2 * i else 0 for t in range(2 * n)] for i in range(n)]

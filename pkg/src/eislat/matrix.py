"""Small dense matrices and vectors over E, stored as tuples of EisInt.

Everything here is immutable; a matrix is a tuple of rows.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .eisenstein import ONE, ZERO, EisInt, exact_div

Vec = tuple[EisInt, ...]
Matrix = tuple[Vec, ...]


def vec(entries: Iterable) -> Vec:
    return tuple(EisInt.coerce(x) for x in entries)


def mat(rows: Iterable[Iterable]) -> Matrix:
    return tuple(vec(r) for r in rows)


def identity(n: int) -> Matrix:
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def zeros(m: int, n: int) -> Matrix:
    return tuple(tuple(ZERO for _ in range(n)) for _ in range(m))


def scalar_matrix(c: EisInt, n: int) -> Matrix:
    c = EisInt.coerce(c)
    return tuple(tuple(c if i == j else ZERO for j in range(n)) for i in range(n))


def diagonal(entries: Sequence) -> Matrix:
    d = vec(entries)
    n = len(d)
    return tuple(tuple(d[i] if i == j else ZERO for j in range(n)) for i in range(n))


def transpose(M: Matrix) -> Matrix:
    return tuple(zip(*M)) if M else ()


def conj_transpose(M: Matrix) -> Matrix:
    return tuple(tuple(x.conj() for x in col) for col in zip(*M))


def conj_vec(v: Vec) -> Vec:
    return tuple(x.conj() for x in v)


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    cols = list(zip(*B))
    out = []
    for row in A:
        out_row = []
        for col in cols:
            s = ZERO
            for x, y in zip(row, col):
                if x and y:
                    s = s + x * y
            out_row.append(s)
        out.append(tuple(out_row))
    return tuple(out)


def mat_vec(A: Matrix, v: Vec) -> Vec:
    out = []
    for row in A:
        s = ZERO
        for x, y in zip(row, v):
            if x and y:
                s = s + x * y
        out.append(s)
    return tuple(out)


def mat_add(A: Matrix, B: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(A, B))


def mat_sub(A: Matrix, B: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(r, s)) for r, s in zip(A, B))


def mat_neg(A: Matrix) -> Matrix:
    return tuple(tuple(-x for x in r) for r in A)


def mat_scale(c: EisInt, A: Matrix) -> Matrix:
    c = EisInt.coerce(c)
    return tuple(tuple(c * x for x in r) for r in A)


def vec_add(v: Vec, w: Vec) -> Vec:
    return tuple(x + y for x, y in zip(v, w))


def vec_sub(v: Vec, w: Vec) -> Vec:
    return tuple(x - y for x, y in zip(v, w))


def vec_scale(c: EisInt, v: Vec) -> Vec:
    c = EisInt.coerce(c)
    return tuple(c * x for x in v)


def mat_pow(A: Matrix, k: int) -> Matrix:
    if k < 0:
        raise ValueError("use an explicit inverse for negative powers")
    result = identity(len(A))
    base = A
    while k:
        if k & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base)
        k >>= 1
    return result


def is_identity(A: Matrix) -> bool:
    return all(A[i][j] == (1 if i == j else 0) for i in range(len(A)) for j in range(len(A)))


def matrix_order(A: Matrix, limit: int = 64) -> int | None:
    """Smallest k >= 1 with A^k = I, or None if none is found up to limit."""
    P = A
    for k in range(1, limit + 1):
        if is_identity(P):
            return k
        P = mat_mul(P, A)
    return None


def det(M: Matrix) -> EisInt:
    """Determinant by fraction-free (Bareiss) elimination; exact in E."""
    n = len(M)
    if n == 0:
        return ONE
    A = [list(r) for r in M]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if not A[k][k]:
            for i in range(k + 1, n):
                if A[i][k]:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return ZERO
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = exact_div(A[i][j] * A[k][k] - A[i][k] * A[k][j], prev)
            A[i][k] = ZERO
        prev = A[k][k]
    d = A[n - 1][n - 1]
    return d if sign == 1 else -d


def minor(M: Matrix, i: int, j: int) -> Matrix:
    return tuple(tuple(x for c, x in enumerate(r) if c != j) for k, r in enumerate(M) if k != i)


def adjugate(M: Matrix) -> Matrix:
    n = len(M)
    if n == 1:
        return ((ONE,),)
    cof = [[(det(minor(M, i, j)) if (i + j) % 2 == 0 else -det(minor(M, i, j))) for j in range(n)] for i in range(n)]
    return transpose(tuple(tuple(r) for r in cof))


def to_pairs(M) -> list:
    """JSON-friendly nested [a, b] pairs for a vector or matrix."""
    if isinstance(M, EisInt):
        return [M.a, M.b]
    return [to_pairs(x) for x in M]


def from_pairs(data) -> tuple:
    if isinstance(data, (list, tuple)) and len(data) == 2 and all(isinstance(x, int) for x in data):
        return EisInt(data[0], data[1])
    return tuple(from_pairs(x) for x in data)


def format_vec(v: Vec) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"

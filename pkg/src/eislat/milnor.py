"""Monodromy of Brieskorn-type singularities x_1^{k_1} + ... + x_n^{k_n}.

For one variable the reduced homology of the Milnor fiber {x^k = 1} is the
rank k-1 module V(k) spanned by differences a_i - a_{i+1} of the k roots,
and monodromy is the cyclic shift a_i -> a_{i+1}.  For several variables
the monodromy is the tensor product of the one-variable shifts.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

import numpy as np
import sympy

from .eisenstein import EisInt
from .hermitian import DIAG5, LatVec, inner
from .linalg import hermitian_inertia


@dataclass(frozen=True)
class CyclicModule:
    """V(k) on the basis d_i = a_i - a_{i+1}, i = 0..k-2."""

    k: int
    monodromy: np.ndarray

    @property
    def rank(self) -> int:
        return self.k - 1


def vk(k: int, direction: int = 1) -> CyclicModule:
    """The shift a_i -> a_{i+direction} on V(k), as an integer matrix on columns."""
    if k < 2:
        raise ValueError("V(k) needs k >= 2")
    if direction not in (1, -1):
        raise ValueError("direction must be +1 or -1")
    r = k - 1
    M = np.zeros((r, r), dtype=np.int64)
    if direction == 1:
        for i in range(r - 1):
            M[i + 1, i] = 1
        # d_{k-2} = a_{k-2} - a_{k-1} -> a_{k-1} - a_0 = -(d_0 + ... + d_{k-2})
        M[:, r - 1] = -1
    else:
        for i in range(1, r):
            M[i - 1, i] = 1
        # d_0 = a_0 - a_1 -> a_{k-1} - a_0
        M[:, 0] = -1
    return CyclicModule(k, M)


def _kron(mats: Sequence[np.ndarray]) -> np.ndarray:
    out = np.ones((1, 1), dtype=np.int64)
    for m in mats:
        out = np.kron(out, m)
    return out


def matrix_order(M: np.ndarray, limit: int = 1000) -> int:
    eye = np.eye(M.shape[0], dtype=np.int64)
    P = M.copy()
    for n in range(1, limit + 1):
        if np.array_equal(P, eye):
            return n
        P = P @ M
    raise ValueError("order exceeds limit")


def char_poly(M: np.ndarray) -> sympy.Poly:
    t = sympy.Symbol("t")
    return sympy.Matrix(M.tolist()).charpoly(t)


@dataclass(frozen=True)
class TensorSystem:
    ks: tuple[int, ...]
    factors: tuple[np.ndarray, ...]
    monodromy: np.ndarray
    sigma: np.ndarray  # 1 x ... x 1 x (shift of the last factor)

    @property
    def rank(self) -> int:
        return self.monodromy.shape[0]


def tensor_system(ks: Sequence[int], direction: int = 1) -> TensorSystem:
    ks = tuple(int(k) for k in ks)
    if not ks:
        raise ValueError("need at least one exponent")
    factors = tuple(vk(k, direction).monodromy for k in ks)
    psi = _kron(factors)
    sigma = _kron([np.eye(k - 1, dtype=np.int64) for k in ks[:-1]] + [factors[-1]])
    return TensorSystem(ks, factors, psi, sigma)


@dataclass
class BrieskornReport:
    ks: list
    direction: int
    rank: int
    order: int
    char_poly: list  # coefficients, leading first
    sigma_order: int
    sigma_relation: bool  # sigma^2 + sigma + 1 = 0
    commute: bool
    psi_over_sigma_is_minus_identity: bool

    @property
    def ok(self) -> bool:
        return (
            self.rank == 2
            and self.order == 6
            and self.char_poly == [1, -1, 1]
            and self.sigma_order == 3
            and self.sigma_relation
            and self.commute
            and self.psi_over_sigma_is_minus_identity
        )

    def to_json(self) -> dict:
        d = dict(self.__dict__)
        d["ok"] = self.ok
        return d


def nodal_monodromy(direction: int = 1) -> BrieskornReport:
    """x^2 + y^2 + z^2 + w^3: the monodromy is -sigma, i.e. the scalar -w."""
    ts = tensor_system((2, 2, 2, 3), direction)
    psi, sigma = ts.monodromy, ts.sigma
    eye = np.eye(ts.rank, dtype=np.int64)
    # sigma has order 3 so sigma^{-1} = sigma^2
    sigma_inv = sigma @ sigma
    cp = char_poly(psi)
    return BrieskornReport(
        ks=list(ts.ks),
        direction=direction,
        rank=ts.rank,
        order=matrix_order(psi),
        char_poly=[int(c) for c in cp.all_coeffs()],
        sigma_order=matrix_order(sigma),
        sigma_relation=bool(np.array_equal(sigma @ sigma + sigma + eye, 0 * eye)),
        commute=bool(np.array_equal(psi @ sigma, sigma @ psi)),
        psi_over_sigma_is_minus_identity=bool(np.array_equal(psi @ sigma_inv, -eye)),
    )


# --- the sign of vanishing cycles ----------------------------------------


@dataclass
class SignatureReport:
    witnesses_ok: bool
    inertia: tuple
    max_negative_rank: int
    candidates_checked: int
    negative_definite_found: int

    @property
    def ok(self) -> bool:
        return self.witnesses_ok and self.max_negative_rank == 1 and self.negative_definite_found == 0

    def to_json(self) -> dict:
        d = dict(self.__dict__)
        d["inertia"] = list(self.inertia)
        d["ok"] = self.ok
        return d


def _random_negative_vector(rng: random.Random, box: int = 3) -> LatVec:
    while True:
        c = [EisInt(rng.randint(-box, box), rng.randint(-box, box)) for _ in range(5)]
        v = DIAG5.vector(c)
        if v.norm() < 0:
            return v


def signature_forcing_check(samples: int = 50, seed: int = 0) -> SignatureReport:
    """Four mutually orthogonal norm -1 vectors cannot exist in signature (4, 1).

    The witnesses e_1..e_4 have norm 1 and are pairwise orthogonal.  The form
    has exactly one negative direction, so no rank 4 sublattice is negative
    definite; random 4-tuples of negative vectors are checked for this by
    exact inertia of their Gram matrix.
    """
    es = [DIAG5.vector([1 if j == i else 0 for j in range(5)]) for i in range(1, 5)]
    witnesses_ok = all(e.norm() == 1 for e in es) and all(
        not inner(a, b) for i, a in enumerate(es) for b in es[i + 1 :]
    )
    p, n, z = hermitian_inertia(DIAG5.entries)
    rng = random.Random(seed)
    found = 0
    for _ in range(samples):
        vs = [_random_negative_vector(rng) for _ in range(4)]
        G = tuple(tuple(inner(vs[j], vs[i]) for j in range(4)) for i in range(4))
        _, neg, _ = hermitian_inertia(G)
        if neg == 4:
            found += 1
    return SignatureReport(witnesses_ok, (p, n, z), n, samples, found)

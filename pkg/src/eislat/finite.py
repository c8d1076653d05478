"""The quadratic space V = L / theta L over F_3 and its orthogonal group.

Since w = 1 mod theta, complex conjugation acts trivially on E / theta E, so
a hermitian Gram A reduces to a symmetric matrix Q over F_3 and
q(x) = x^T Q x.  The polarization is B(x, y) = q(x + y) - q(x) - q(y) =
2 x^T Q y, and the reflection in a nonisotropic v is

    x -> x - B(x, v) / q(v) * v.

Group closures are computed breadth-first with numpy, each 5x5 matrix
encoded as a base-3 integer.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .eisenstein import EisInt, mod_theta
from .hermitian import HermGram, Isometry

F3Vec = tuple[int, ...]


class NotAnIsometryError(ValueError):
    pass


# --- the field and the form ---------------------------------------------


@dataclass(frozen=True)
class F3:
    """An element of the field with three elements."""

    value: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", self.value % 3)

    def __add__(self, other: "F3") -> "F3":
        return F3(self.value + F3._v(other))

    def __sub__(self, other: "F3") -> "F3":
        return F3(self.value - F3._v(other))

    def __mul__(self, other: "F3") -> "F3":
        return F3(self.value * F3._v(other))

    def __neg__(self) -> "F3":
        return F3(-self.value)

    def inverse(self) -> "F3":
        if self.value == 0:
            raise ZeroDivisionError("0 has no inverse in F_3")
        return F3(self.value)  # 1*1 = 2*2 = 1

    def is_square(self) -> bool:
        return self.value in (0, 1)

    @staticmethod
    def _v(x) -> int:
        return x.value if isinstance(x, F3) else int(x)


@dataclass(frozen=True)
class F3Quadratic:
    """Symmetric 5x5 (or n x n) matrix Q over F_3 with q(x) = x^T Q x."""

    Q: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        Q = tuple(tuple(int(x) % 3 for x in row) for row in self.Q)
        object.__setattr__(self, "Q", Q)
        n = len(Q)
        if any(Q[i][j] != Q[j][i] for i in range(n) for j in range(n)):
            raise ValueError("quadratic form matrix must be symmetric")

    @property
    def n(self) -> int:
        return len(self.Q)

    def array(self) -> np.ndarray:
        return np.array(self.Q, dtype=np.int64)

    def q(self, x: Sequence[int]) -> int:
        n = self.n
        return sum(x[i] * self.Q[i][j] * x[j] for i in range(n) for j in range(n)) % 3

    def bilinear(self, x: Sequence[int], y: Sequence[int]) -> int:
        """B(x, y) = q(x + y) - q(x) - q(y)."""
        n = self.n
        return (2 * sum(x[i] * self.Q[i][j] * y[j] for i in range(n) for j in range(n))) % 3

    def determinant(self) -> int:
        return int(round(np.linalg.det(self.array()))) % 3

    def is_nondegenerate(self) -> bool:
        return _rank_mod3(self.array()) == self.n

    def vectors(self) -> list[F3Vec]:
        return [tuple(v) for v in itertools.product(range(3), repeat=self.n)]

    def reflection(self, v: Sequence[int]) -> "F3Isometry":
        return reflection(self, v)

    def is_isometry(self, M: np.ndarray) -> bool:
        Q = self.array()
        M = np.asarray(M, dtype=np.int64)
        return bool(np.all((M.T @ Q @ M - Q) % 3 == 0))


def _rank_mod3(A: np.ndarray) -> int:
    A = np.array(A, dtype=np.int64) % 3
    rows, cols = A.shape
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if A[i, c]), None)
        if piv is None:
            continue
        A[[r, piv]] = A[[piv, r]]
        A[r] = (A[r] * A[r, c]) % 3  # scale pivot to 1 (inverse of x is x)
        for i in range(rows):
            if i != r and A[i, c]:
                A[i] = (A[i] - A[i, c] * A[r]) % 3
        r += 1
        if r == rows:
            break
    return r


def reduce_gram(G: HermGram) -> F3Quadratic:
    return F3Quadratic(tuple(tuple(mod_theta(x) for x in row) for row in G.entries))


# --- isometries ---------------------------------------------------------


@dataclass(frozen=True)
class F3Isometry:
    """A matrix over F_3 (acting on column vectors) preserving q."""

    matrix: tuple[tuple[int, ...], ...]
    form: F3Quadratic = field(repr=False)

    def __post_init__(self) -> None:
        M = tuple(tuple(int(x) % 3 for x in row) for row in self.matrix)
        object.__setattr__(self, "matrix", M)
        if not self.form.is_isometry(np.array(M)):
            raise NotAnIsometryError("matrix does not preserve the quadratic form")

    def array(self) -> np.ndarray:
        return np.array(self.matrix, dtype=np.int64)

    def __matmul__(self, other: "F3Isometry") -> "F3Isometry":
        return F3Isometry(tuple(map(tuple, (self.array() @ other.array()) % 3)), self.form)

    def apply(self, x: Sequence[int]) -> F3Vec:
        return tuple(int(t) for t in (self.array() @ np.array(x, dtype=np.int64)) % 3)

    def is_identity(self) -> bool:
        return np.array_equal(self.array(), np.eye(self.form.n, dtype=np.int64))

    def key(self) -> int:
        return int(encode(self.array()[None])[0])


def identity_f3(form: F3Quadratic) -> F3Isometry:
    return F3Isometry(tuple(map(tuple, np.eye(form.n, dtype=np.int64))), form)


def minus_identity(form: F3Quadratic) -> F3Isometry:
    return F3Isometry(tuple(map(tuple, (-np.eye(form.n, dtype=np.int64)) % 3)), form)


def reflection_array(form: F3Quadratic, v: Sequence[int]) -> np.ndarray:
    qv = form.q(v)
    if qv == 0:
        raise ValueError("cannot reflect in an isotropic vector")
    Q = form.array()
    v = np.array(v, dtype=np.int64) % 3
    # x -> x - B(x, v)/q(v) v with B(x, v) = 2 v^T Q x and 1/q(v) = q(v)
    row = (2 * qv * (v @ Q)) % 3
    return (np.eye(form.n, dtype=np.int64) - np.outer(v, row)) % 3


def reflection(form: F3Quadratic, v: Sequence[int]) -> F3Isometry:
    return F3Isometry(tuple(map(tuple, reflection_array(form, v))), form)


def reduce_isometry(M: Isometry) -> F3Isometry:
    """Entrywise reduction mod theta of an exact lattice isometry."""
    form = reduce_gram(M.frame)
    return F3Isometry(tuple(tuple(mod_theta(x) for x in row) for row in M.matrix), form)


def reduce_vector(v: Sequence[EisInt]) -> F3Vec:
    return tuple(mod_theta(x) for x in v)


def projective_rep(x: Sequence[int]) -> F3Vec:
    """Scale so that the first nonzero coordinate is 1."""
    x = tuple(int(t) % 3 for t in x)
    for t in x:
        if t:
            return x if t == 1 else tuple((2 * s) % 3 for s in x)
    return x


# --- Cartan-Dieudonne and spinor norms -----------------------------------


def _sub(x, y):
    return tuple((a - b) % 3 for a, b in zip(x, y))


def cartan_dieudonne(g: F3Isometry, max_length: int = 12) -> list[F3Vec]:
    """Nonisotropic vectors v_1..v_k with g = s_{v_1} ... s_{v_k}.

    Greedy: if some x has g x - x nonisotropic, the reflection in w = g x - x
    carries g x to x and fixes Fix(g), so s_w g has a strictly larger fixed
    space.  If every g x - x is isotropic, replace g by s_u g for a
    nonisotropic u chosen so that the new element has a good vector.
    """
    form = g.form
    if not form.is_isometry(g.array()):
        raise NotAnIsometryError("input is not an isometry")
    vectors = [v for v in form.vectors() if any(v)]
    nonisotropic = [v for v in vectors if form.q(v)]

    def step(h: np.ndarray):
        for x in vectors:
            hx = tuple(int(t) for t in (h @ np.array(x)) % 3)
            w = _sub(hx, x)
            if any(w) and form.q(w):
                return w
        return None

    out: list[F3Vec] = []
    h = g.array() % 3
    eye = np.eye(form.n, dtype=np.int64)
    while not np.array_equal(h, eye):
        if len(out) >= max_length:
            raise RuntimeError("Cartan-Dieudonne decomposition did not terminate")
        w = step(h)
        if w is None:
            # pre-compose with a reflection that makes progress possible
            for u in nonisotropic:
                h2 = (reflection_array(form, u) @ h) % 3
                if step(h2) is not None or np.array_equal(h2, eye):
                    out.append(u)
                    h = h2
                    break
            else:
                raise RuntimeError("no usable reflection found")
            continue
        out.append(w)
        h = (reflection_array(form, w) @ h) % 3
    # s_{w_k} ... s_{w_1} g = 1, so g = s_{w_1} ... s_{w_k}
    return out


def product_of_reflections(form: F3Quadratic, vs: Iterable[Sequence[int]]) -> np.ndarray:
    M = np.eye(form.n, dtype=np.int64)
    for v in vs:
        M = (M @ reflection_array(form, v)) % 3
    return M


def spinor_norm_of_vectors(form: F3Quadratic, vs: Iterable[Sequence[int]]) -> int:
    p = 1
    for v in vs:
        p = (p * form.q(v)) % 3
    return 1 if p == 1 else -1


def spinor_norm(g: F3Isometry) -> int:
    """Square class of q(v_1)...q(v_k) as +1 / -1."""
    return spinor_norm_of_vectors(g.form, cartan_dieudonne(g))


# --- group closures -----------------------------------------------------

_POW3 = 3 ** np.arange(25, dtype=np.int64)


def encode(mats: np.ndarray) -> np.ndarray:
    """Base-3 integer keys of a stack of 5x5 matrices over F_3."""
    n = mats.shape[-1]
    flat = mats.reshape(mats.shape[0], n * n) % 3
    return flat.astype(np.int64) @ _POW3[: n * n]


def decode(keys: np.ndarray, n: int = 5) -> np.ndarray:
    keys = np.asarray(keys, dtype=np.int64)
    digits = (keys[:, None] // _POW3[None, : n * n]) % 3
    return digits.reshape(len(keys), n, n)


@dataclass
class Closure:
    """A finite matrix group over F_3 found by breadth-first closure."""

    keys: np.ndarray  # sorted
    labels: np.ndarray | None  # optional +-1 labels, aligned with keys
    label_conflicts: int
    n: int = 5

    @property
    def order(self) -> int:
        return len(self.keys)

    def contains(self, M) -> bool:
        k = encode(np.asarray(M, dtype=np.int64)[None])[0]
        i = np.searchsorted(self.keys, k)
        return bool(i < len(self.keys) and self.keys[i] == k)

    def label_of(self, M) -> int:
        if self.labels is None:
            raise ValueError("closure was computed without labels")
        k = encode(np.asarray(M, dtype=np.int64)[None])[0]
        i = int(np.searchsorted(self.keys, k))
        if i >= len(self.keys) or self.keys[i] != k:
            raise KeyError("element not in the group")
        return int(self.labels[i])

    def matrices(self) -> np.ndarray:
        return decode(self.keys, self.n)

    def projective_order(self) -> int:
        """Order of the image modulo the scalars +-1."""
        mats = self.matrices()
        neg = encode((-mats) % 3)
        canon = np.minimum(self.keys, neg)
        return int(len(np.unique(canon)))

    def subset_keys(self, label: int) -> np.ndarray:
        if self.labels is None:
            raise ValueError("closure was computed without labels")
        return self.keys[self.labels == label]


def _dedupe(keys: np.ndarray, labels: np.ndarray) -> tuple[np.ndarray, np.ndarray, int]:
    """Sorted unique keys, the label of the first occurrence, and the number
    of duplicates whose label disagrees with it."""
    order = np.argsort(keys, kind="stable")
    keys, labels = keys[order], labels[order]
    uniq, first, counts = np.unique(keys, return_index=True, return_counts=True)
    ref = np.repeat(labels[first], counts)
    return uniq, labels[first], int(np.count_nonzero(ref != labels))


def bfs_closure(
    gens: Sequence, labels: Sequence[int] | None = None, n: int = 5, limit: int = 10 ** 6, chunk: int = 2048
) -> Closure:
    """Closure of the generators under multiplication.

    If ``labels`` (+1/-1 per generator) are given, every element gets the
    product of generator labels along its BFS path, and each edge of the
    Cayley graph is checked for consistency; ``label_conflicts`` counts the
    edges where two paths disagree (zero exactly when the labelling extends
    to a homomorphism on the group).
    """
    G = np.array([np.asarray(g.array() if isinstance(g, F3Isometry) else g, dtype=np.int64) % 3 for g in gens])
    use_labels = labels is not None
    if len(G) == 0:
        G = np.eye(n, dtype=np.int64)[None]
        labels = [1]
    lab = np.array(labels if use_labels else [1] * len(G), dtype=np.int64)
    seen_keys = encode(np.eye(n, dtype=np.int64)[None])
    seen_labels = np.array([1], dtype=np.int64)
    frontier_keys, frontier_labels = seen_keys, seen_labels
    conflicts = 0
    while len(frontier_keys):
        new_keys, new_labels = [], []
        for s in range(0, len(frontier_keys), chunk):
            F = decode(frontier_keys[s : s + chunk], n)
            prods = np.einsum("fij,gjk->fgik", F, G) % 3
            keys = encode(prods.reshape(-1, n, n))
            plabels = (frontier_labels[s : s + chunk, None] * lab[None, :]).reshape(-1)
            ukeys, ulabels, bad = _dedupe(keys, plabels)
            conflicts += bad
            idx = np.minimum(np.searchsorted(seen_keys, ukeys), len(seen_keys) - 1)
            known = seen_keys[idx] == ukeys
            conflicts += int(np.count_nonzero(known & (seen_labels[idx] != ulabels)))
            new_keys.append(ukeys[~known])
            new_labels.append(ulabels[~known])
        frontier_keys, frontier_labels, bad = _dedupe(np.concatenate(new_keys), np.concatenate(new_labels))
        conflicts += bad
        if len(frontier_keys):
            all_keys = np.concatenate([seen_keys, frontier_keys])
            all_labels = np.concatenate([seen_labels, frontier_labels])
            o = np.argsort(all_keys, kind="stable")
            seen_keys, seen_labels = all_keys[o], all_labels[o]
        if len(seen_keys) > limit:
            raise RuntimeError("group closure exceeded the size limit")
    return Closure(seen_keys, seen_labels if use_labels else None, conflicts if use_labels else 0, n)


def all_reflections(form: F3Quadratic) -> list[tuple[F3Vec, np.ndarray]]:
    """One reflection per projective nonisotropic vector."""
    out = []
    for v in form.vectors():
        if any(v) and projective_rep(v) == v and form.q(v):
            out.append((v, reflection_array(form, v)))
    return out


def full_orthogonal_group(form: F3Quadratic) -> Closure:
    """Aut(V, q) as the group generated by all reflections, labelled by the
    spinor norm of the reflection (q(v) as a square class)."""
    refl = all_reflections(form)
    labels = [1 if form.q(v) == 1 else -1 for v, _ in refl]
    return bfs_closure([m for _, m in refl], labels, form.n)


def expected_go_order(n: int = 5, p: int = 3) -> int:
    """|GO_{2m+1}(p)| = 2 p^{m^2} prod_{i=1..m} (p^{2i} - 1)."""
    m = (n - 1) // 2
    out = 2 * p ** (m * m)
    for i in range(1, m + 1):
        out *= p ** (2 * i) - 1
    return out


WEYL_E6_ORDER = 51840


def count_norm_one(form: F3Quadratic) -> tuple[int, int]:
    """(number of vectors with q = 1, number of projective classes)."""
    vs = [v for v in form.vectors() if any(v) and form.q(v) == 1]
    return len(vs), len({projective_rep(v) for v in vs})

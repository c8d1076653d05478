"""The group generated by the seven hexflections R1..R7 of the affine E6
configuration, acting on the HYP5 lattice.

Words are stored in application order: the first token acts first, so the
matrix of a word (t1, ..., tn) is M(tn) ... M(t1).  Tokens are
``(name, exponent)`` where ``name`` is a generator "R1".."R7" (exponent
taken mod 6) or one of the translation macros below, each of which has a
fixed defining word in the generators that is re-verified by the tests:

* ``A1, A2, A3``: T_{w e_i, theta/2}, e.g. A1 = R2^-1 R1.
* ``B1, B2, B3``: T_{-wbar e_i, theta/2} = R A R^-1 for R = R1, R5, R7.
* ``C``: the central translation T_{0, theta} = [A1, B1].

Macros keep certificates short: a translation by a large vector is a single
token with a large exponent rather than a long literal word.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .eisenstein import ONE, ZERO, EisInt, OMEGA, OMEGA_BAR, THETA, UNITS, nearest_quotient
from .hermitian import (
    HYP5,
    RHO,
    ROOTS,
    Isometry,
    LatVec,
    TranslationParams,
    adjacent,
    biflection,
    heisenberg_product,
    hexflection,
    inner,
    translation,
    translation_params_of,
    triflection,
)
from .matrix import Matrix, Vec, identity, mat_mul, mat_vec, to_pairs, vec

GEN_NAMES = tuple(f"R{i}" for i in range(1, 8))
MACRO_NAMES = ("A1", "B1", "A2", "B2", "A3", "B3", "C")


class ReductionError(ValueError):
    """Input is not a primitive null vector (or reduction failed)."""


class SearchBudgetExceeded(RuntimeError):
    """A bounded search ended without an answer; this is not a disproof."""


# --- generators and macros ----------------------------------------------


@lru_cache(maxsize=None)
def generator(i: int) -> Isometry:
    return hexflection(ROOTS[i])


@lru_cache(maxsize=None)
def generator_power(i: int, e: int) -> Matrix:
    e %= 6
    return (generator(i) ** e).matrix


_LIMB = {1: (1, 2), 2: (5, 4), 3: (7, 6)}  # coordinate -> (outer root, inner root)


def _macro_definitions() -> dict[str, tuple[tuple[str, int], ...]]:
    d: dict[str, tuple[tuple[str, int], ...]] = {}
    for c, (outer, inner_) in _LIMB.items():
        a = ((f"R{outer}", 1), (f"R{inner_}", 5))  # R_inner^-1 R_outer
        d[f"A{c}"] = a
        d[f"B{c}"] = ((f"R{outer}", 5),) + a + ((f"R{outer}", 1),)
    a1, b1 = d["A1"], d["B1"]
    inv = lambda w: tuple((n, (-e) % 6) for n, e in reversed(w))
    # [A1, B1] = A1 B1 A1^-1 B1^-1; in application order B1^-1 acts first
    d["C"] = inv(b1) + inv(a1) + b1 + a1
    return d


MACRO_WORDS = _macro_definitions()


def _macro_params(name: str) -> TranslationParams:
    if name == "C":
        return TranslationParams((0, 0, 0), 2)
    c = int(name[1]) - 1
    entry = OMEGA if name[0] == "A" else -OMEGA_BAR
    lam = tuple(entry if t == c else ZERO for t in range(3))
    return TranslationParams(lam, 1)


def macro_power_params(name: str, q: int) -> TranslationParams:
    # T_{lam,z}^q = T_{q lam, q z} because Im <lam|lam> = 0
    p = _macro_params(name)
    return TranslationParams(tuple(q * x for x in p.lam), q * p.k)


def token_matrix(name: str, e: int) -> Matrix:
    if name in GEN_NAMES:
        return generator_power(int(name[1]), e)
    if name in MACRO_NAMES:
        return translation(macro_power_params(name, e)).matrix
    raise KeyError(f"unknown token {name!r}")


# --- words --------------------------------------------------------------


def _normalize(tokens: Iterable) -> tuple[tuple[str, int], ...]:
    out: list[tuple[str, int]] = []
    for name, e in tokens:
        name = str(name)
        e = int(e)
        if name in GEN_NAMES:
            e %= 6
        elif name not in MACRO_NAMES:
            raise KeyError(f"unknown token {name!r}")
        if e == 0:
            continue
        if out and out[-1][0] == name:
            merged = out[-1][1] + e
            if name in GEN_NAMES:
                merged %= 6
            out.pop()
            if merged:
                out.append((name, merged))
            continue
        out.append((name, e))
    return tuple(out)


@dataclass(frozen=True)
class Word:
    """A product of generator tokens, in application order."""

    tokens: tuple[tuple[str, int], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "tokens", _normalize(self.tokens))

    def __add__(self, other: "Word") -> "Word":
        """self first, then other."""
        return Word(self.tokens + other.tokens)

    def __len__(self) -> int:
        return len(self.tokens)

    def inverse(self) -> "Word":
        return Word(tuple((n, -e) for n, e in reversed(self.tokens)))

    def power(self, k: int) -> "Word":
        base = self if k >= 0 else self.inverse()
        return Word(base.tokens * abs(k))

    def matrix(self) -> Matrix:
        M = identity(5)
        for name, e in self.tokens:
            M = mat_mul(token_matrix(name, e), M)
        return M

    def isometry(self) -> Isometry:
        return Isometry(self.matrix(), HYP5, check=False)

    def apply(self, v: Sequence[EisInt]) -> Vec:
        x = vec(v)
        for name, e in self.tokens:
            x = mat_vec(token_matrix(name, e), x)
        return x

    def expand(self, limit: int = 100000) -> "Word":
        """The literal word in R1..R7 (macros substituted)."""
        out: list[tuple[str, int]] = []
        for name, e in self.tokens:
            if name in GEN_NAMES:
                out.append((name, e))
                continue
            body = MACRO_WORDS[name] if e > 0 else Word(MACRO_WORDS[name]).inverse().tokens
            out.extend(body * abs(e))
            if len(out) > limit:
                raise SearchBudgetExceeded("literal expansion exceeds the length limit")
        return Word(tuple(out))

    def to_json(self) -> list:
        return [[n, e] for n, e in self.tokens]

    @classmethod
    def from_json(cls, data) -> "Word":
        return cls(tuple((n, e) for n, e in data))

    def __str__(self) -> str:
        return " ".join(f"{n}^{e}" if e != 1 else n for n, e in self.tokens) or "1"


def gen_word(*pairs: tuple[int, int]) -> Word:
    return Word(tuple((f"R{i}", e) for i, e in pairs))


def random_word(rng: random.Random, length: int) -> Word:
    toks = []
    for _ in range(length):
        toks.append((f"R{rng.randint(1, 7)}", rng.randint(1, 5)))
    return Word(tuple(toks))


# --- relation checks ----------------------------------------------------


def verify_braid_table() -> list[dict]:
    """Braid for diagram-adjacent pairs, commute otherwise; all 21 pairs."""
    out = []
    for i in range(1, 8):
        for j in range(i + 1, 8):
            a, b = generator(i), generator(j)
            if adjacent(i, j):
                ok = (a @ b @ a).matrix == (b @ a @ b).matrix
                kind = "braid"
            else:
                ok = (a @ b).matrix == (b @ a).matrix
                kind = "commute"
            out.append({"pair": [i, j], "relation": kind, "ok": ok})
    return out


def T(lam, k: int) -> Isometry:
    return translation(TranslationParams(lam, k))


def _restrict_11(M: Matrix) -> Matrix:
    return tuple(tuple(M[i][j] for j in (3, 4)) for i in (3, 4))


def verify_named_identities() -> list[dict]:
    R = {i: generator(i) for i in range(1, 8)}
    checks = []

    def add(name, ok, **data):
        checks.append({"name": name, "ok": bool(ok), **data})

    add("R2^-1 R1 = T_{(w,0,0), theta/2}", (R[2].inverse() @ R[1]).matrix == T((OMEGA, 0, 0), 1).matrix)
    p = translation_params_of((R[1] @ R[2]) ** 3)
    add("(R1 R2)^3 = T_{0, -theta}", p is not None and p.k == -2 and not any(p.lam))
    a, b = T((OMEGA, 0, 0), 1), T((-OMEGA_BAR, 0, 0), 1)
    comm = a @ b @ a.inverse() @ b.inverse()
    add("[T_{(w,0,0),theta/2}, T_{(-wbar,0,0),theta/2}] = T_{0,theta}", comm.matrix == T((0, 0, 0), 2).matrix)
    add(
        "R1 T_{(w,0,0),theta/2} R1^-1 = T_{(-wbar,0,0),theta/2}",
        (R[1] @ a @ R[1].inverse()).matrix == b.matrix,
    )
    r3_11 = _restrict_11(R[3].matrix)
    expected = ((THETA * OMEGA_BAR, OMEGA_BAR), (OMEGA_BAR, ZERO))
    add("R3 on I_{1,1}", r3_11 == expected, matrix=to_pairs(r3_11))
    # R3 preserves I_{1,1} and fixes the lambda coordinates
    add("R3 fixes lambda", all(R[3].matrix[i][j] == (1 if i == j else 0) for i in range(3) for j in range(5)))
    F = R[3] @ T((0, 0, 0), -2)
    f11 = _restrict_11(F.matrix)
    add("F = R3 T_{0,-theta} on I_{1,1}", f11 == ((ZERO, OMEGA_BAR), (OMEGA_BAR, ZERO)), matrix=to_pairs(f11))
    F2 = F @ F
    add(
        "F^2 = w on I_{1,1}",
        _restrict_11(F2.matrix) == ((OMEGA, ZERO), (ZERO, OMEGA))
        and all(F2.matrix[i][j] == (1 if i == j else 0) for i in range(3) for j in range(5)),
    )
    bvec = HYP5.vector([1, -1, 0, 0, 0])
    bprime = HYP5.vector([0, 0, 0, 1, 1])
    img = (T((OMEGA, -OMEGA, 0), 0) @ F @ T((1, 0, 0), 1))(bvec)
    add(
        "T_{w,-w,0;0} F T_{1,0,0;theta/2}(b) = -wbar b'",
        img.coords == tuple(-OMEGA_BAR * x for x in bprime.coords),
        image=to_pairs(img.coords),
    )
    Bp = biflection(bprime)
    add("B' on I_{1,1}", _restrict_11(Bp.matrix) == ((ZERO, EisInt(-1)), (EisInt(-1), ZERO)))
    BpF = Bp @ F
    add("B'F = -wbar on I_{1,1}", _restrict_11(BpF.matrix) == ((-OMEGA_BAR, ZERO), (ZERO, -OMEGA_BAR)))
    B = biflection(bvec)
    swap = B.matrix[0][1] == 1 and B.matrix[1][0] == 1 and B.matrix[0][0] == 0 and B.matrix[2][2] == 1
    add("biflection in (1,-1,0;0,0) swaps the first two coordinates", swap)
    img6 = R[6](ROOTS[7])
    add("R6(r7) = (0,0,-w;0,wbar)", img6.coords == vec([0, 0, -OMEGA, 0, OMEGA_BAR]), image=to_pairs(img6.coords))
    add("R1..R7 distinct", len({generator(i).matrix for i in range(1, 8)}) == 7)
    for name, body in MACRO_WORDS.items():
        add(f"macro {name}", Word(body).matrix() == translation(_macro_params(name)).matrix)
    return checks


# --- translations as words ----------------------------------------------


def translation_word(lam: Sequence[EisInt], k: int) -> Word:
    """A word (over the macros) equal to T_{lam, k theta/2}."""
    target = TranslationParams(lam, k)
    toks: list[tuple[str, int]] = []
    acc = TranslationParams((0, 0, 0), 0)
    for c in range(3):
        x = target.lam[c]
        # x = p (-wbar) + q w with -wbar = 1 + w: p = a, q = b - a
        p, q = x.a, x.b - x.a
        for name, e in ((f"A{c + 1}", q), (f"B{c + 1}", p)):
            if e:
                # the token acts after what is already accumulated
                acc = heisenberg_product(macro_power_params(name, e), acc)
                toks.append((name, e))
    m, rem = divmod(target.k - acc.k, 2)
    assert rem == 0 and acc.lam == target.lam
    if m:
        toks.append(("C", m))
    return Word(tuple(toks))


def translation_generators() -> dict[str, Word]:
    """Literal R-words for the standard translation generators."""
    return {name: Word(body) for name, body in MACRO_WORDS.items()}


# --- reflections in height-1 roots --------------------------------------


def _pos_for(coords: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(set(coords)))


def _height1_root(a: Sequence[EisInt], n: int) -> tuple[Vec, Word, Word]:
    """The root T_{a,z} C^n (r3) and the conjugating word X with X(r3) = root.

    Returns (root coords, X, X^-1).
    """
    a = vec(a)
    k = sum(x.norm() for x in a) % 2
    X = Word((("C", n),)) + translation_word(a, k) if n else translation_word(a, k)
    return X.apply(ROOTS[3].coords), X, X.inverse()


def _ray_minimizers(alpha: EisInt, beta: EisInt) -> list[int]:
    """Integers n near the minimum of norm(alpha + n beta) (a convex quadratic)."""
    if not beta:
        return [0]
    prod = alpha * beta.conj()
    num = -(2 * prod.a - prod.b)  # -2 Re(alpha conj(beta))
    den = 2 * beta.norm()
    lo = num // den
    return [lo, lo + 1]


def _best_reflection(
    v: Vec, shifts: Sequence[Vec], window: Iterable[int] = range(-2, 3), powers: Sequence[int] = (1, 2, 3, 4, 5)
):
    """Best (new height norm, a, n, e) over reflections in height-1 roots.

    For the root r = X(r3) with X = T_a C^n, the hexflection power R^e in r
    sends the height H to H - (1 - zeta) h(v, r); this is affine in n, so the
    optimal n is found exactly by minimizing a convex quadratic.
    """
    H = v[3]
    best = None
    for a in shifts:
        base_root, _, _ = _height1_root(a, 0)
        # C^n shifts the last coordinate of the root by n theta
        h0 = HYP5.form(v, base_root)  # h(v, r) at n = 0
        dh = -THETA * H  # d/dn of h(v, r): conj(n theta) * H = -n theta H
        for e in powers:
            zeta = UNITS[e]
            c = ONE - zeta
            alpha = H - c * h0
            beta = -c * dh
            ns = set(window) | set(_ray_minimizers(alpha, beta))
            for n in sorted(ns):
                Hn = alpha + beta * n
                key = (Hn.norm(), abs(n), n, e)
                if best is None or key < best[0]:
                    best = (key, a, n, e)
    return best


def _apply_reflection_word(a: Vec, n: int, e: int) -> Word:
    _, X, Xinv = _height1_root(a, n)
    return Xinv + Word((("R3", e),)) + X


def _shift_candidates(active: Sequence[int], extended: bool) -> list[Vec]:
    out = [(ZERO, ZERO, ZERO)]
    if not extended:
        return out
    for t in active:
        for u in UNITS:
            out.append(tuple(u if s == t else ZERO for s in range(3)))
    if len(active) >= 2:
        for i in active:
            for j in active:
                if i < j:
                    for u in UNITS:
                        for w in UNITS:
                            out.append(tuple(u if s == i else (w if s == j else ZERO) for s in range(3)))
    return out


# --- transports between simple roots ------------------------------------


def adjacent_transport(i: int, j: int) -> Word:
    """Word carrying r_i exactly to r_j for diagram-adjacent i, j.

    R_j then R_i sends r_i to wbar r_j, and R_j^4 multiplies r_j by w.
    """
    if not adjacent(i, j):
        raise ValueError(f"r{i} and r{j} are not adjacent")
    return gen_word((j, 1), (i, 1), (j, 4))


def path_transport(path: Sequence[int]) -> Word:
    w = Word()
    for i, j in zip(path, path[1:]):
        w = w + adjacent_transport(i, j)
    return w


# carries r3 to r7 through r6; uses only R3, R6, R7, so it fixes lambda_1, lambda_2
ESCAPE_WORD = path_transport((3, 6, 7))


# --- certificates -------------------------------------------------------


@dataclass
class Step:
    kind: str  # "translate", "reflect", "escape", "unit"
    word: Word
    height_norm: int  # norm of the height after the step

    def to_json(self) -> dict:
        return {"kind": self.kind, "word": self.word.to_json(), "height_norm": self.height_norm}


@dataclass
class ReductionCertificate:
    input: Vec
    steps: list[Step]
    final: Vec
    unit: EisInt

    @property
    def word(self) -> Word:
        w = Word()
        for s in self.steps:
            w = w + s.word
        return w

    @property
    def heights(self) -> list[int]:
        """Height norms: the input's, then after each reflection or escape step."""
        out = [self.input[3].norm()]
        for s in self.steps:
            if s.kind in ("reflect", "escape"):
                out.append(s.height_norm)
        return out

    def reflection_heights_decrease(self) -> bool:
        prev = self.input[3].norm()
        for s in self.steps:
            if s.kind == "reflect":
                if not s.height_norm < prev:
                    return False
            prev = s.height_norm
        return True

    def escapes(self) -> int:
        return sum(1 for s in self.steps if s.kind == "escape")

    def verify(self) -> bool:
        """Re-apply the word by literal matrix multiplication."""
        M = self.word.matrix()
        if mat_vec(M, self.input) != self.final:
            return False
        if self.final != tuple(self.unit * x for x in RHO.coords):
            return False
        return self.reflection_heights_decrease()

    def to_json(self) -> dict:
        return {
            "input": to_pairs(self.input),
            "word": self.word.to_json(),
            "steps": [s.to_json() for s in self.steps],
            "heights": self.heights,
            "final": to_pairs(self.final),
            "unit": to_pairs(self.unit),
        }


def _is_primitive(v: Vec) -> bool:
    from .eisenstein import gcd

    g = ZERO
    for x in v:
        g = gcd(g, x)
    return g.norm() == 1


def _translate_step(v: Vec, active: Sequence[int]) -> Word | None:
    """Translation making 3 norm(lambda_i) <= norm(H) on active coordinates."""
    H = v[3]
    lam = [ZERO, ZERO, ZERO]
    for i in active:
        lam[i] = -nearest_quotient(v[i], H)
    if not any(lam):
        return None
    k = sum(x.norm() for x in lam) % 2
    return translation_word(lam, k)


def height_reduce(
    v: Vec,
    active: Sequence[int] = (0, 1, 2),
    allow_escape: bool = True,
    max_steps: int = 10000,
    powers: Sequence[int] = (1, 2, 3, 4, 5),
    extended: bool = True,
) -> tuple[Vec, list[Step], tuple[int, ...]]:
    """Drive the height of v to 0 with translations and height-1 reflections.

    ``active`` lists the lambda coordinates that may be nonzero; all moves
    keep the inactive ones at 0.  Returns the final vector, the steps, and
    the final active set (an escape drops coordinate 3).

    ``powers`` are the allowed exponents of the hexflection in a height-1
    root (only 1 gives the plain (-w)-reflections); ``extended`` allows roots
    T_a(r3) with a != 0 before declaring the reduction stuck.
    """
    active = _pos_for(active)
    steps: list[Step] = []
    for _ in range(max_steps):
        H = v[3]
        if not H:
            return v, steps, active
        w = _translate_step(v, active)
        if w is not None:
            v = w.apply(v)
            steps.append(Step("translate", w, H.norm()))
        for i in active:
            assert 3 * v[i].norm() <= H.norm()
        best = _best_reflection(v, _shift_candidates(active, False), powers=powers)
        if best[0][0] >= H.norm() and extended:
            best = _best_reflection(v, _shift_candidates(active, True), powers=powers)
        if best[0][0] < H.norm():
            _, a, n, e = best
            w = _apply_reflection_word(a, n, e)
            v = w.apply(v)
            assert v[3].norm() == best[0][0]
            steps.append(Step("reflect", w, v[3].norm()))
            continue
        # stuck: v is orthogonal to a height-1 root; move that root to r3,
        # then into r7, which puts v inside r7-perp (lambda_3 = 0)
        if not allow_escape or 2 not in active:
            raise ReductionError(f"height reduction stuck at height {H} with no escape available")
        root = _orthogonal_height1_root(v, active)
        if root is None:
            raise ReductionError(f"height reduction stuck at height {H}, no orthogonal height-1 root found")
        a, n = root
        _, X, Xinv = _height1_root(a, n)
        w = Xinv + ESCAPE_WORD
        v = w.apply(v)
        assert v[2] == 0
        steps.append(Step("escape", w, v[3].norm()))
        active = tuple(t for t in active if t != 2)
    raise ReductionError("height reduction did not terminate")


def _orthogonal_height1_root(v: Vec, active: Sequence[int]):
    H = v[3]
    for a in _shift_candidates(active, True):
        base_root, _, _ = _height1_root(a, 0)
        h0 = HYP5.form(v, base_root)
        # h(v, C^n root) = h0 - n theta H
        q = h0 * (THETA * H).conj()
        N = (THETA * H).norm()
        if q.a % N == 0 and q.b % N == 0 and q.b == 0:
            return a, q.a // N
    return None


def _unit_word_table() -> dict[EisInt, Word]:
    """Words g with g(rho) = u rho, one per unit u."""
    table = {ONE: Word()}
    F = Word((("C", -1), ("R3", 1)))  # R3 T_{0,-theta}
    F2 = F + F  # acts by w on I_{1,1}, trivially on lambda
    table[OMEGA] = F2
    table[OMEGA_BAR] = F2 + F2
    for u, w in list(table.items()):
        table[-u] = w + MINUS_RHO_WORD
    return table


# A word g in R1..R7 with g(rho) = -rho, found by scripts/search_words.py
# (random words followed by their reduction certificates) and re-verified in
# the tests.  No word of length <= 4 has this property.
MINUS_RHO_WORD = Word(
    (
        ("R3", 2), ("R1", 2), ("R6", 1), ("R3", 3), ("R5", 4), ("R4", 1), ("R3", 1), ("R4", 1),
        ("R5", 5), ("R4", 5), ("R5", 1), ("R4", 5), ("R5", 1), ("R6", 1), ("R7", 5), ("R6", 5),
        ("R7", 1), ("R2", 1), ("R1", 4), ("R2", 1), ("R1", 1), ("R2", 4), ("R1", 1), ("R2", 1),
        ("R1", 4), ("R2", 1), ("R1", 1), ("R2", 4), ("R1", 1), ("R3", 1), ("R5", 5), ("R4", 1),
        ("R7", 5), ("R6", 1), ("R1", 5), ("R2", 2), ("R1", 5), ("R2", 5), ("R1", 2), ("R2", 5),
        ("R3", 1),
    )
)


def reduce_null(
    v: LatVec | Sequence[EisInt],
    normalize_unit: bool = False,
    powers: Sequence[int] = (1, 2, 3, 4, 5),
    extended: bool = True,
) -> ReductionCertificate:
    """Certificate carrying a primitive null vector to u * rho.

    With ``normalize_unit`` the word continues to rho itself.  ``powers`` and
    ``extended`` are passed to ``height_reduce``.
    """
    coords = v.coords if isinstance(v, LatVec) else vec(v)
    if len(coords) != 5:
        raise ReductionError("expected five HYP5 coordinates")
    if HYP5.norm(coords) != 0:
        raise ReductionError("vector is not null")
    if not any(coords):
        raise ReductionError("zero vector")
    if not _is_primitive(coords):
        raise ReductionError("vector is not primitive")
    active = tuple(i for i in range(3))
    final, steps, _ = height_reduce(coords, active, powers=powers, extended=extended)
    # H = 0 and null forces lambda = 0, so final = nu * rho with nu a unit
    assert not any(final[:4])
    u = final[4]
    if normalize_unit and u != ONE:
        w = unit_word(u.conj())  # u^-1 = conj(u)
        final = w.apply(final)
        steps.append(Step("unit", w, 0))
        u = ONE
    return ReductionCertificate(coords, steps, final, u)


def unit_word(u: EisInt) -> Word:
    """A word g with g(rho) = u rho."""
    table = _unit_word_table()
    if u not in table:
        raise ValueError(f"{u} is not a unit")
    return table[u]


# --- orbit transport ----------------------------------------------------


def _simple_short_root_word(v: Vec, active: Sequence[int]) -> Word:
    """For a height-0 short root v = (u e_i; 0, nu), a word carrying it to e_i."""
    i = next(t for t in range(3) if v[t])
    u = v[i]
    nu = v[4]
    steps = Word()
    if nu:
        lam = [ZERO, ZERO, ZERO]
        lam[i] = (nu * u.conj()).conj()
        k = sum(x.norm() for x in lam) % 2
        steps = steps + translation_word(lam, k)
    gen = {0: 1, 1: 5, 2: 7}[i]
    e = next(e for e in range(6) if UNITS[e] * u == ONE)
    steps = steps + gen_word((gen, e))
    return steps


_TO_R1 = {0: Word(), 1: path_transport((5, 4, 3, 2, 1)), 2: path_transport((7, 6, 3, 2, 1))}
_E_INDEX_ROOT = {0: 1, 1: 5, 2: 7}


def reduce_root(v: Sequence[EisInt], active: Sequence[int] = (0, 1, 2)) -> tuple[Word, int]:
    """Carry a short root to (1, 0, 0; 0, 0) inside the active coordinates.

    Returns (word, index of the standard basis vector reached before the final
    chain).  Raises ReductionError when height reduction gets stuck.
    """
    v = vec(v)
    if HYP5.norm(v) != 1:
        raise ReductionError("not a short root")
    final, steps, act = height_reduce(v, active, allow_escape=False)
    w = Word()
    for s in steps:
        w = w + s.word
    w = w + _simple_short_root_word(final, act)
    v2 = w.apply(v)
    i = next(t for t in range(3) if v2[t])
    return w, i


def short_root_to_r1(v: Sequence[EisInt]) -> Word:
    w, i = reduce_root(v)
    w = w + _TO_R1[i]
    assert w.apply(v) == ROOTS[1].coords
    return w


LONG_TARGET = vec([1, 1, 0, 0, 0])


def long_root_normal_form(v: Sequence[EisInt]) -> Word:
    """Carry a long root to (1, 1, 0; 0, 0).

    Height-reduce, kill nu by a translation, then split the result as a sum
    of two orthogonal short roots: send one to e_1 and the other to e_2
    using generators that fix e_1.
    """
    v = vec(v)
    if HYP5.norm(v) != 2:
        raise ReductionError("not a long root")
    final, steps, _ = height_reduce(v, (0, 1, 2), allow_escape=False)
    w = Word()
    for s in steps:
        w = w + s.word
    # final = (lambda; 0, nu) with two unit coordinates
    idx = [t for t in range(3) if final[t]]
    assert len(idx) == 2 and all(final[t].norm() == 1 for t in idx)
    i, j = idx
    a = tuple(final[t] if t == i else ZERO for t in range(3)) + (ZERO, final[4])
    # send the short root a = (u e_i; 0, nu) to e_1
    wa = _simple_short_root_word(a, (0, 1, 2)) + _TO_R1[i]
    w = w + wa
    cur = w.apply(v)
    c = tuple(x - y for x, y in zip(cur, ROOTS[1].coords))
    # c is a short root orthogonal to e_1; move it to e_2 fixing e_1
    wc, k = reduce_root(c, (1, 2))
    if k == 2:
        wc = wc + path_transport((7, 6, 3, 4, 5))
    w = w + wc
    out = w.apply(v)
    if out != LONG_TARGET:
        raise ReductionError(f"long-root normal form ended at {out}")
    return w


@dataclass
class TransportResult:
    found: bool
    word: Word | None
    reason: str = ""


def orbit_transport(x: Sequence[EisInt], y: Sequence[EisInt], budget: int = 10000) -> TransportResult:
    """A word carrying x to y (checked exactly), or a bounded failure."""
    x, y = vec(x), vec(y)
    nx, ny = HYP5.norm(x), HYP5.norm(y)
    if nx != ny:
        raise ValueError("norm mismatch")
    try:
        if nx == 0:
            wx = reduce_null(x, normalize_unit=True).word
            wy = reduce_null(y, normalize_unit=True).word
            w = wx + wy.inverse()
        elif nx == 1:
            w = short_root_to_r1(x) + short_root_to_r1(y).inverse()
        elif nx == 2:
            w = long_root_normal_form(x) + long_root_normal_form(y).inverse()
        else:
            return TransportResult(False, None, "no transport strategy for this norm")
    except ReductionError as exc:
        return TransportResult(False, None, f"not found within budget: {exc}")
    if w.apply(x) != y:
        return TransportResult(False, None, "internal check failed")
    return TransportResult(True, w)


# --- central scalars and torsion ----------------------------------------


def omega_scalar_word() -> Word:
    """A word equal to the scalar w on the whole lattice: F^2 acts by w on
    I_{1,1}, and the triflections R1^4, R5^4, R7^4 multiply the three
    lambda coordinates by w."""
    F = Word((("C", -1), ("R3", 1)))
    return F + F + gen_word((1, 4), (5, 4), (7, 4))


@dataclass
class TorsionReport:
    k: int
    in_congruence_subgroup: bool
    order: int | None
    eigen_ranks: tuple[int, int, int]
    splits: bool

    @property
    def ok(self) -> bool:
        return self.in_congruence_subgroup and self.order == 3 and self.splits

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "in_gamma_theta": self.in_congruence_subgroup,
            "order": self.order,
            "eigen_ranks": list(self.eigen_ranks),
            "splits": self.splits,
        }


def torsion_check(roots: Sequence[LatVec], scalar: EisInt = ONE) -> TorsionReport:
    """Product of triflections in mutually orthogonal short roots (times a
    scalar 1, w or wbar): congruence, order, and eigenlattice splitting."""
    from .finite import reduce_isometry
    from .linalg import kernel
    from .matrix import det, mat_sub, scalar_matrix

    if not roots:
        raise ValueError("need at least one root")
    frame = roots[0].frame
    for i, r in enumerate(roots):
        if r.norm() != 1:
            raise ValueError("torsion check needs short roots")
        for s in roots[i + 1 :]:
            if inner(r, s):
                raise ValueError("roots are not mutually orthogonal")
    g = Isometry(scalar_matrix(scalar, frame.n), frame, check=False)
    for r in roots:
        g = g @ triflection(r)
    in_theta = reduce_isometry(g).is_identity()
    order = g.order(12)
    bases = []
    ranks = []
    for ev in (ONE, OMEGA, OMEGA_BAR):
        K = kernel(mat_sub(g.matrix, scalar_matrix(ev, frame.n)))
        ranks.append(len(K))
        bases.extend(K)
    splits = len(bases) == frame.n and det(tuple(bases)).norm() == 1
    return TorsionReport(len(roots), in_theta, order, tuple(ranks), splits)

"""Verification suites shared by the CLI and the acceptance tests.

Each suite returns a plain dict: the suite name, its parameters and a list of
checks, each with a status ("pass" / "fail" / "skipped") and data.  Reports
contain no timings or other run-dependent values, so identical parameters
give identical JSON.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .eisenstein import ONE, OMEGA, OMEGA_BAR, ZERO, EisInt
from .hermitian import (
    DIAG5,
    HYP5,
    RHO,
    ROOTS,
    TranslationParams,
    heisenberg_commutator,
    heisenberg_product,
    im_part_k,
    lam_inner,
    translation,
)
from .linalg import gram_determinant, kernel
from .matrix import to_pairs

SCHEMA = "eislat.report/1"
DEFAULT_SEED = 0


@dataclass(frozen=True)
class SuiteConfig:
    bound: int = 3
    seed: int = DEFAULT_SEED
    heisenberg_pairs: int = 10_000
    null_vectors: int = 1000
    max_word_length: int = 30
    transport_samples: int = 50


def _check(name: str, passed: bool, **data) -> dict:
    data.pop("ok", None)
    return {"name": name, "status": "pass" if passed else "fail", **data}


def _report(suite: str, checks: list[dict], **params) -> dict:
    return {
        "suite": suite,
        "parameters": params,
        "passed": all(c["status"] != "fail" for c in checks),
        "checks": checks,
    }


# --- relations and Gram ---------------------------------------------------


def relations_suite(cfg: SuiteConfig) -> dict:
    from .gamma import verify_braid_table, verify_named_identities

    checks = []
    table = verify_braid_table()
    bad = [t["pair"] for t in table if not t["ok"]]
    checks.append(_check("braid/commute table of R1..R7", not bad and len(table) == 21, pairs=len(table), failures=bad))
    for c in verify_named_identities():
        data = {k: v for k, v in c.items() if k not in ("name", "ok")}
        checks.append(_check(c["name"], c["ok"], **data))
    return _report("relations", checks)


def gram_suite(cfg: SuiteConfig) -> dict:
    checks = []
    rs = [ROOTS[i] for i in range(1, 7)]
    G = tuple(tuple(HYP5.form(rs[j].coords, rs[i].coords) for j in range(6)) for i in range(6))
    sub = tuple(tuple(G[i][j] for j in range(1, 6)) for i in range(1, 6))
    d = gram_determinant(sub)
    checks.append(_check("det Gram(r2..r6) = -1", d == -1, determinant=d))
    ker = kernel(G)
    checks.append(_check("Gram(r1..r6) has a rank-1 kernel", len(ker) == 1, kernel=[to_pairs(k) for k in ker]))

    def combo(cs):
        return tuple(sum((EisInt(c) * rs[i].coords[t] for i, c in enumerate(cs)), ZERO) for t in range(5))

    found = combo((1, -1, 0, 1, -1, 0))
    checks.append(
        _check(
            "r1 - r2 + r4 - r5 = 0 (the kernel relation)",
            not any(found) and len(ker) == 1 and _proportional(ker[0], (1, -1, 0, 1, -1, 0)),
        )
    )
    alt = combo((1, 1, 0, -1, -1, 0))
    alt_in_kernel = all(
        not sum((G[i][j] * EisInt(c) for j, c in enumerate((1, 1, 0, -1, -1, 0))), ZERO) for i in range(6)
    )
    # recorded, not required: this combination is neither zero nor in the kernel
    checks.append(
        {
            "name": "r1 + r2 - r4 - r5 (alternative combination) status",
            "status": "pass",
            "is_zero": not any(alt),
            "in_gram_kernel": alt_in_kernel,
            "value": to_pairs(alt),
        }
    )
    return _report("gram", checks)


def _proportional(v, w) -> bool:
    w = [EisInt.coerce(x) for x in w]
    # v = c w for some c iff all 2x2 minors vanish
    return all(v[i] * w[j] == v[j] * w[i] for i in range(len(v)) for j in range(len(v)))


# --- translations -----------------------------------------------------------


def _random_params(rng: random.Random, box: int = 6) -> TranslationParams:
    lam = tuple(EisInt(rng.randint(-box, box), rng.randint(-box, box)) for _ in range(3))
    n = sum(x.norm() for x in lam)
    k = rng.randint(-3 * box, 3 * box)
    k += (k - n) % 2
    return TranslationParams(lam, k)


def _translation_arrays(ps: list[TranslationParams]) -> np.ndarray:
    """Batch of translation matrices as int arrays of shape (N, 2, 5, 5)."""
    N = len(ps)
    M = np.zeros((N, 2, 5, 5), dtype=np.int64)
    for i in range(5):
        M[:, 0, i, i] = 1
    for t, p in enumerate(ps):
        for i, x in enumerate(p.lam):
            M[t, 0, i, 3] = x.a
            M[t, 1, i, 3] = x.b
            c = -x.conj()
            M[t, 0, 4, i] = c.a
            M[t, 1, 4, i] = c.b
        z = p.corner()
        M[t, 0, 4, 3] = z.a
        M[t, 1, 4, 3] = z.b
    return M


def _batch_mul(X: np.ndarray, Y: np.ndarray) -> np.ndarray:
    """Exact product of batches of E-matrices stored as (a, b) integer parts."""
    Xa, Xb, Ya, Yb = X[:, 0], X[:, 1], Y[:, 0], Y[:, 1]
    BD = Xb @ Yb
    return np.stack([Xa @ Ya - BD, Xa @ Yb + Xb @ Ya - BD], axis=1)


def translations_suite(cfg: SuiteConfig) -> dict:
    from .gamma import MACRO_WORDS, Word, _macro_params, translation_word

    rng = random.Random(cfg.seed)
    n = cfg.heisenberg_pairs
    P = [_random_params(rng) for _ in range(n)]
    Q = [_random_params(rng) for _ in range(n)]
    TP, TQ = _translation_arrays(P), _translation_arrays(Q)
    # the batch builder must agree with the exact constructor
    sample = range(0, n, max(1, n // 100))
    builder_ok = all(
        np.array_equal(TP[t], _translation_arrays([P[t]])[0])
        and translation(P[t]).matrix == tuple(tuple(EisInt(int(TP[t, 0, i, j]), int(TP[t, 1, i, j])) for j in range(5)) for i in range(5))
        for t in sample
    )
    eye = np.zeros((1, 2, 5, 5), dtype=np.int64)
    eye[0, 0] = np.eye(5, dtype=np.int64)

    prod = _batch_mul(TP, TQ)
    pred = _translation_arrays([heisenberg_product(p, q) for p, q in zip(P, Q)])
    comp_fail = np.nonzero(~np.all(prod == pred, axis=(1, 2, 3)))[0]

    inv = _translation_arrays([p.inverse() for p in P])
    inv_fail = np.nonzero(~np.all(_batch_mul(TP, inv) == eye, axis=(1, 2, 3)))[0]

    invQ = _translation_arrays([q.inverse() for q in Q])
    comm = _batch_mul(_batch_mul(_batch_mul(TP, TQ), inv), invQ)
    cpred = _translation_arrays([heisenberg_commutator(p, q) for p, q in zip(P, Q)])
    comm_fail = np.nonzero(~np.all(comm == cpred, axis=(1, 2, 3)))[0]

    # the opposite ordering Im<lambda'|lambda> in the composition law
    swapped = []
    for p, q in zip(P, Q):
        lam = tuple(x + y for x, y in zip(p.lam, q.lam))
        swapped.append(TranslationParams(lam, p.k + q.k + im_part_k(lam_inner(q.lam, p.lam))))
    swap_fail = int((~np.all(prod == _translation_arrays(swapped), axis=(1, 2, 3))).sum())

    def cex(idx):
        if not len(idx):
            return None
        t = int(idx[0])
        return {"p": [to_pairs(P[t].lam), P[t].k], "q": [to_pairs(Q[t].lam), Q[t].k]}

    checks = [
        _check("batch translation builder matches the exact constructor", builder_ok, sampled=len(sample)),
        _check("composition law", not len(comp_fail), pairs=n, failures=len(comp_fail), counterexample=cex(comp_fail)),
        _check("inverse law", not len(inv_fail), pairs=n, failures=len(inv_fail), counterexample=cex(inv_fail)),
        _check("commutator law", not len(comm_fail), pairs=n, failures=len(comm_fail), counterexample=cex(comm_fail)),
        {
            "name": "composition with the opposite inner-product order (recorded)",
            "status": "pass",
            "pairs": n,
            "disagreements": swap_fail,
        },
    ]
    for name in MACRO_WORDS:
        checks.append(
            _check(f"{name} as an R-word", Word(MACRO_WORDS[name]).matrix() == translation(_macro_params(name)).matrix)
        )
    # random translations written as macro words
    bad = []
    for _ in range(50):
        p = _random_params(rng, box=3)
        if translation_word(p.lam, p.k).matrix() != translation(p).matrix:
            bad.append([to_pairs(p.lam), p.k])
    checks.append(_check("translation_word reproduces random translations", not bad, sampled=50, failures=bad))
    return _report("translations", checks, seed=cfg.seed, pairs=n)


# --- finite geometry --------------------------------------------------------


def f3_suite(cfg: SuiteConfig) -> dict:
    from .finite import (
        WEYL_E6_ORDER,
        bfs_closure,
        count_norm_one,
        expected_go_order,
        full_orthogonal_group,
        minus_identity,
        reduce_gram,
        reduce_isometry,
        spinor_norm,
    )
    from .gamma import generator
    from .hermitian import isometry_hyp_to_diag

    form = reduce_gram(DIAG5)
    n1, proj = count_norm_one(form)
    checks = [_check("norm-1 vectors of V and their projective classes", (n1, proj) == (72, 36), count=n1, projective=proj)]
    gens = [reduce_isometry(isometry_hyp_to_diag(generator(i))) for i in range(1, 8)]
    spins = [spinor_norm(g) for g in gens]
    checks.append(_check("reduced generators have spinor norm +1", all(s == 1 for s in spins), spinor_norms=spins))
    full = full_orthogonal_group(form)
    sub = bfs_closure([g.array() for g in gens])
    checks.append(
        _check(
            "full orthogonal group by reflection closure",
            full.order == expected_go_order() and full.label_conflicts == 0,
            order=full.order,
            expected=expected_go_order(),
            label_conflicts=full.label_conflicts,
        )
    )
    plus = full.subset_keys(1)
    checks.append(
        _check(
            "generated subgroup is the spinor-norm +1 subgroup, of index 2",
            full.order == 2 * sub.order and np.array_equal(np.sort(sub.keys), np.sort(plus)),
            subgroup_order=sub.order,
            index=full.order // sub.order,
        )
    )
    mi = minus_identity(form)
    s = spinor_norm(mi)
    checks.append(_check("central involution -1 has spinor norm -1", s == -1, spinor_norm=s))
    checks.append(
        _check(
            "projective orthogonal group order",
            full.projective_order() == WEYL_E6_ORDER,
            order=full.projective_order(),
            weyl_e6=WEYL_E6_ORDER,
        )
    )
    return _report("f3", checks)


# --- torsion ---------------------------------------------------------------


def torsion_suite(cfg: SuiteConfig) -> dict:
    from .gamma import torsion_check

    es = [DIAG5.vector([1 if j == i else 0 for j in range(5)]) for i in range(1, 5)]
    checks = []
    for scalar, label in ((ONE, "1"), (OMEGA, "w"), (OMEGA_BAR, "wbar")):
        for k in range(1, 5):
            r = torsion_check(es[:k], scalar)
            checks.append(_check(f"k={k}, scalar {label}", r.ok, **r.to_json()))
    return _report("torsion", checks)


# --- arrangement ------------------------------------------------------------


def arrangement_suite(cfg: SuiteConfig) -> dict:
    from .arrangement import scan, stratum_stabilizer

    r = scan(cfg.bound, cfg.seed)
    d = r.to_json()
    checks = [
        _check("enumerated roots", r.roots >= 1000, roots=r.roots, mirrors=r.mirrors, pairs=r.pairs),
        _check(
            "intersecting mirrors are orthogonal",
            not r.intersect_not_orthogonal,
            intersecting=r.intersecting_pairs,
            orthogonal=r.orthogonal_pairs,
            violations=d["intersect_not_orthogonal"],
        ),
        _check(
            "complement inertia agrees with the Gram criterion",
            not r.complement_mismatches,
            checked=r.complement_checked,
            mismatches=d["complement_mismatches"],
        ),
        _check(
            "distinct mirrors of one family are disjoint",
            not r.same_family_violations,
            pairs=r.same_family_pairs,
            violations=d["same_family_violations"],
        ),
        _families_check(r, d),
        _check(
            "family labels are equivariant under reduced generators",
            not r.equivariance_violations,
            checked=r.equivariance_checked,
            violations=d["equivariance_violations"],
        ),
    ]
    es = [DIAG5.vector([1 if j == i else 0 for j in range(5)]) for i in range(1, 5)]
    for k in range(1, 5):
        st = stratum_stabilizer(es[:k])
        checks.append(_check(f"triflection group along a codimension-{k} stratum", st.ok, order=st.order, expected=3**k))
    return _report("arrangement", checks, bound=cfg.bound, seed=cfg.seed)


def _families_check(r, d) -> dict:
    from .arrangement import DEFAULT_BOUND

    data = {"families": r.families, "mirror_counts": d["family_mirror_counts"]}
    if r.bound < DEFAULT_BOUND and not r.all_families:
        return {
            "name": "36 families occur",
            "status": "skipped",
            "reason": f"bound {r.bound} is below {DEFAULT_BOUND}, the smallest bound reaching every family",
            **data,
        }
    return _check("36 families occur", r.all_families, **data)


# --- reduction --------------------------------------------------------------


def reduction_suite(cfg: SuiteConfig) -> dict:
    from .gamma import random_word, reduce_null

    rng = random.Random(cfg.seed)
    n = cfg.null_vectors
    failures = []
    escapes = 0
    not_decreasing = []
    max_len = 0
    for _ in range(n):
        w = random_word(rng, rng.randint(1, cfg.max_word_length))
        v = w.apply(RHO.coords)
        try:
            cert = reduce_null(v)
        except Exception as exc:  # reported, never hidden
            failures.append({"vector": to_pairs(v), "error": str(exc)})
            continue
        if not cert.verify():
            failures.append({"vector": to_pairs(v), "error": "certificate does not verify"})
        hs = cert.heights
        if any(b >= a for a, b in zip(hs, hs[1:])):
            not_decreasing.append({"vector": to_pairs(v), "heights": hs})
        escapes += cert.escapes()
        max_len = max(max_len, len(cert.word))
    checks = [
        _check("every null vector reduces to unit * rho with a verified certificate", not failures, vectors=n, failures=failures),
        _check("height sequences strictly decrease", not not_decreasing, counterexamples=not_decreasing[:5]),
        {"name": "reduction statistics", "status": "pass", "escapes": escapes, "max_certificate_tokens": max_len},
    ]
    cert = reduce_null(RHO)
    checks.append(_check("rho reduces with the empty word", len(cert.word) == 0))
    return _report("reduction", checks, seed=cfg.seed, vectors=n, max_word_length=cfg.max_word_length)


# --- milnor -----------------------------------------------------------------


def milnor_suite(cfg: SuiteConfig) -> dict:
    from .milnor import char_poly, matrix_order, nodal_monodromy, signature_forcing_check, tensor_system, vk

    checks = []
    for k, order, poly in ((2, 2, [1, 1]), (3, 3, [1, 1, 1]), (6, 6, [1, 1, 1, 1, 1, 1])):
        m = vk(k).monodromy
        got = [int(c) for c in char_poly(m).all_coeffs()]
        checks.append(_check(f"V({k}) shift", matrix_order(m) == order and got == poly, order=matrix_order(m), char_poly=got))
    for direction in (1, -1):
        r = nodal_monodromy(direction)
        checks.append(_check(f"x^2+y^2+z^2+w^3 monodromy (direction {direction:+d})", r.ok, **r.to_json()))
    t = tensor_system((2, 2))
    checks.append(_check("(-1) x (-1) = +1", t.monodromy.tolist() == [[1]]))
    s = signature_forcing_check(seed=cfg.seed)
    checks.append(_check("vanishing cycles have norm +1 (signature obstruction)", s.ok, **s.to_json()))
    return _report("milnor", checks, seed=cfg.seed)


# --- classification ---------------------------------------------------------


def classify_suite(cfg: SuiteConfig) -> dict:
    from .classify import (
        DIAGONAL_POINT,
        FERMAT_POINT,
        biflection_transform_type,
        central_composite_spinor,
        d4_theta,
        diagonal_complement_check,
        fermat_complement_check,
        gluing_profile,
        identify,
        long_root_transitivity,
        orbit_invariance,
        orthogonal_short_roots,
    )
    from .hermitian import biflection

    checks = []
    e0 = DIAG5.vector([1, 0, 0, 0, 0])
    n0 = len(orthogonal_short_roots(e0))
    checks.append(_check("e0 is orthogonal to 24 short roots", n0 == 24, count=n0))
    for v, norm, name in ((DIAGONAL_POINT, -5, "diagonal"), (FERMAT_POINT, -3, "fermat")):
        roots = orthogonal_short_roots(v)
        checks.append(
            _check(
                f"{name} point: norm and orthogonal short roots",
                v.norm() == norm and not roots,
                vector=to_pairs(v.coords),
                norm=v.norm(),
                short_roots=len(roots),
            )
        )
        g = gluing_profile(v)
        checks.append(_check(f"{name} point: gluing profile", g.ok, **g.to_json()))
        checks.append(_check(f"{name} point: identification", identify(v) == name, identified=identify(v)))
        o = orbit_invariance(v, name, seed=cfg.seed)
        checks.append(_check(f"{name} point: invariants along random images", o.ok, **o.to_json()))
    D4 = d4_theta()
    checks.append(
        _check(
            "D4(theta): determinant 3, no norm-1 vectors",
            gram_determinant(D4) == 3 and not D4.vectors_of_norm(1),
            determinant=gram_determinant(D4),
        )
    )
    f = fermat_complement_check()
    checks.append(_check("Fermat complement is isometric to D4(theta)", f.ok, **f.to_json()))
    dchk = diagonal_complement_check()
    checks.append(_check("diagonal complement is spanned by an A4 chain", dchk.ok, **dchk.to_json()))
    r = DIAG5.vector([0, 0, 0, 1, -1])
    bt = biflection_transform_type(biflection(r))
    checks.append(_check("biflection in a long root is a norm-2 reflection", bt.norm == 2 and bt.long_root, **bt.to_json()))
    b0 = biflection_transform_type(biflection(e0))
    checks.append(_check("biflection in e0 is a norm -1 reflection", b0.norm == -1, **b0.to_json()))
    sp = central_composite_spinor(r)
    checks.append(_check("-1 times a long-root biflection has spinor norm +1", sp == 1, spinor_norm=sp))
    tr = long_root_transitivity(cfg.transport_samples, min(cfg.bound, 3), cfg.seed)
    checks.append(_check("long roots transport to (1,1,0;0,0)", tr.ok, **tr.to_json()))
    return _report("classify", checks, seed=cfg.seed, bound=cfg.bound)


SUITES: dict[str, Callable[[SuiteConfig], dict]] = {
    "relations": relations_suite,
    "gram": gram_suite,
    "translations": translations_suite,
    "f3": f3_suite,
    "torsion": torsion_suite,
    "arrangement": arrangement_suite,
    "reduction": reduction_suite,
    "milnor": milnor_suite,
    "classify": classify_suite,
}


def run(names: list[str], cfg: SuiteConfig) -> dict:
    reports = [SUITES[n](cfg) for n in names]
    return {
        "schema": SCHEMA,
        "parameters": {"bound": cfg.bound, "seed": cfg.seed},
        "suites": reports,
        "passed": all(r["passed"] for r in reports),
    }

"""The ten acceptance criteria, each with its runtime limit.

Every test records a PASS/FAIL line that is printed in the terminal summary.
"""

import subprocess
import sys
import time

import pytest

from eislat.suites import SuiteConfig, SUITES
from conftest import ACCEPTANCE

CFG = SuiteConfig()


def _failed(report):
    return [c["name"] for c in report["checks"] if c["status"] == "fail"]


def _record(n, title, ok, elapsed, limit, detail=""):
    in_time = limit is None or elapsed < limit
    status = "PASS" if ok and in_time else "FAIL"
    budget = f" (limit {limit}s)" if limit is not None else ""
    line = f"[{status}] {n:2d}. {title}: {elapsed:.2f}s{budget}"
    if detail:
        line += f" {detail}"
    ACCEPTANCE[n] = line
    assert ok, detail
    assert in_time, f"took {elapsed:.2f}s, limit {limit}s"


def _run_suite(name, cfg=CFG):
    t = time.perf_counter()
    report = SUITES[name](cfg)
    return report, time.perf_counter() - t


def _check(report, name):
    return next(c for c in report["checks"] if c["name"] == name)


def test_1_relations():
    report, dt = _run_suite("relations")
    names = [c["name"] for c in report["checks"]]
    assert "R6(r7) = (0,0,-w;0,wbar)" in names
    assert "(R1 R2)^3 = T_{0, -theta}" in names
    _record(1, "relations", report["passed"], dt, 1, str(_failed(report) or ""))


def test_2_heisenberg():
    report, dt = _run_suite("translations")
    comp = _check(report, "composition law")
    swapped = _check(report, "composition with the opposite inner-product order (recorded)")
    ok = report["passed"] and comp["pairs"] == 10_000
    _record(2, "Heisenberg laws on 10^4 pairs", ok, dt, 5, f"opposite ordering disagrees on {swapped['disagreements']} pairs")


def test_3_gram():
    report, dt = _run_suite("gram")
    alt = _check(report, "r1 + r2 - r4 - r5 (alternative combination) status")
    _record(3, "Gram determinant and kernel", report["passed"], dt, 1, f"alternative combination in kernel: {alt['in_gram_kernel']}")


def test_4_finite_geometry():
    report, dt = _run_suite("f3")
    order = _check(report, "projective orthogonal group order")["order"]
    _record(4, "finite geometry over F3", report["passed"], dt, 60, f"|PAut(V)| = {order}")


def test_5_reduction():
    report, dt = _run_suite("reduction")
    stats = _check(report, "reduction statistics")
    ok = report["passed"] and report["parameters"]["vectors"] == 1000
    _record(5, "null-vector reduction (1000 vectors)", ok, dt, 120, f"escapes {stats['escapes']}")


def test_6_arrangement():
    report, dt = _run_suite("arrangement")
    roots = _check(report, "enumerated roots")
    _record(6, "mirror arrangement", report["passed"] and roots["roots"] >= 1000, dt, 60, f"{roots['roots']} roots, {roots['pairs']} mirror pairs")


def test_7_milnor():
    report, dt = _run_suite("milnor")
    _record(7, "Sebastiani-Thom monodromy", report["passed"], dt, 1)


def test_8_classification():
    report, dt = _run_suite("classify")
    _record(8, "classification of the special points", report["passed"], dt, 30, str(_failed(report) or ""))


def test_9_torsion():
    report, dt = _run_suite("torsion")
    _record(9, "triflection torsion for k = 1..4", report["passed"], dt, 10)


@pytest.mark.slow
def test_10_determinism():
    cmd = [sys.executable, "-m", "eislat", "verify", "all", "--seed", "42"]
    t = time.perf_counter()
    a = subprocess.run(cmd, capture_output=True)
    b = subprocess.run(cmd, capture_output=True)
    dt = time.perf_counter() - t
    ok = a.returncode == 0 and b.returncode == 0 and a.stdout == b.stdout and len(a.stdout) > 0
    _record(10, "byte-identical reports from two runs", ok, dt, None, f"{len(a.stdout)} bytes")

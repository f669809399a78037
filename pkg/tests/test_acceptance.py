"""Acceptance gate: eleven numbered criteria, one pass/fail line each.

Run under pytest (the lines appear in the terminal summary) or directly with
``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import json
import math
import sys
import time
import warnings
from fractions import Fraction
from math import comb
from pathlib import Path

import numpy as np
import pytest

from bicyclic.bounds import cyclic_h_vector, f_to_h, h_to_f, ubt_hbound
from bicyclic.census import edge_density, enumerate_faces, triples_on_short_arcs
from bicyclic.circle import equally_spaced
from bicyclic.cli import main as cli_main
from bicyclic.faces import body_face_certificate, is_face
from bicyclic.hull import fixtures_dir, load_fixture
from bicyclic.polytope import build
from bicyclic.verify import (
    B6_ARC,
    suite_b6,
    suite_deformation,
    suite_newton,
    suite_nonflat,
    suite_simplex,
)

try:
    from conftest import ACCEPTANCE_LINES
except ImportError:  # run as a script outside the tests directory
    ACCEPTANCE_LINES = []


def _failed(rows):
    return [f"{r['claim']} (value {r['value']!r}, bound {r['bound']!r})" for r in rows if not r["pass"]]


def criterion_1():
    start = time.perf_counter()
    P = build(2, equally_spaced(12))
    problems = []
    for mult in (1, 2, 3):
        for i in range(12):
            cert = is_face(P, [i, (i + mult) % 12])
            if cert is None or cert.dimension != 1:
                problems.append(f"pair ({i}, {(i + mult) % 12}) at arc {mult}pi/6 not certified")
    for mult in (5, 6):
        for i in range(12):
            if is_face(P, [i, (i + mult) % 12]) is not None:
                problems.append(f"pair at arc {mult}pi/6 is a face")
    for i in range(4):
        cert = is_face(P, [i, i + 4, i + 8])
        if cert is None or cert.dimension != 2:
            problems.append(f"triangle {i} not a 2-face")
    census = enumerate_faces(P, 4)
    fx = load_fixture(2, 12)
    if set(census.faces) != set(fx["faces"]):
        problems.append("face lattice differs from the hull fixture")
    elapsed = time.perf_counter() - start
    if elapsed >= 10:
        problems.append(f"runtime {elapsed:.1f}s >= 10s")
    return not problems, "; ".join(problems) or f"36 edges, 24 non-faces, 4 triangles, fixture match, {elapsed:.1f}s"


def _psi_report(k, tol, tmp):
    out = Path(tmp) / f"psi{k}.json"
    code = cli_main(["psi", "--k", str(k), "--tol", str(tol), "--json", str(out)])
    return code, json.loads(out.read_text())


def criterion_2(tmp):
    start = time.perf_counter()
    code, rep = _psi_report(2, 0.01, tmp)
    lo, hi = rep["results"]["interval"]
    elapsed = time.perf_counter() - start
    target = 2 * math.pi / 3
    ok = lo - 0.01 <= target <= hi + 0.01 and elapsed < 60 and code == 0
    return ok, f"interval [{lo:.5f}, {hi:.5f}], 2pi/3 = {target:.5f}, {elapsed:.1f}s"


def criterion_3(tmp):
    start = time.perf_counter()
    code, rep = _psi_report(3, 0.02, tmp)
    lo, hi = rep["results"]["interval"]
    elapsed = time.perf_counter() - start
    bound = 4 * math.pi / 5 - 0.02
    ok = lo >= bound and hi < math.pi and elapsed < 300
    return ok, f"interval [{lo:.5f}, {hi:.5f}], need lo >= {bound:.5f} and hi < pi, {elapsed:.1f}s"


def criterion_4():
    parts, ok = [], True
    for n in (12, 24, 36):
        P = build(2, equally_spaced(n))
        census = enumerate_faces(P, 3)
        rho = edge_density(census)
        fx = load_fixture(2, n)
        match = fx is not None and fx["f_vector"][2] == census.f(1)
        good = (not census.partial) and 2 / 3 <= rho <= 1 - 2.0**-4 and match
        ok &= good
        parts.append(f"n={n}: {census.f(1)}/{comb(n, 2)} = {rho:.4f}{'' if match else ' (fixture mismatch)'}")
    return ok, ", ".join(parts)


def criterion_5():
    start = time.perf_counter()
    rows = suite_b6(arc=1.40, trials=100, seed=2024)
    elapsed = time.perf_counter() - start
    ok = all(r["pass"] for r in rows) and elapsed < 300
    return ok, f"{rows[0]['value']} failures of 100, {elapsed:.1f}s"


def criterion_6():
    n = 24
    P = build(3, equally_spaced(n))
    short = triples_on_short_arcs(P, B6_ARC)
    # route 1: certificates on the curve itself
    body = sum(1 for T in short if body_face_certificate(3, P.angles[list(T)]))
    # route 2: polytope LPs on the vertex set
    census = enumerate_faces(P, 3)
    poly = sum(1 for T in short if frozenset(T) in census.faces)
    fx = load_fixture(3, n)
    fixture = sum(1 for T in short if frozenset(T) in set(fx["faces"]))
    ratio = body / comb(n, 3)
    ok = body == poly == fixture == len(short) and 0.08 <= ratio <= 0.159
    return ok, f"{body} certified triples (LP {poly}, fixture {fixture}) / C(24,3) = {ratio:.4f}"


def criterion_7():
    rows = suite_deformation(trials=200, seed=7, ks=[2, 3, 4])
    bad = _failed(rows)
    return not bad, "; ".join(bad) or ", ".join(f"{r['claim']} {r['value']:.2e}" for r in rows[1:])


def criterion_8():
    rows = suite_newton(trials=200, seed=8, ks=[2, 3, 4])
    bad = _failed(rows)
    return not bad, "; ".join(bad) or ", ".join(f"{r['claim']} {r['value']:.2e}" for r in rows)


def criterion_9():
    rows = suite_simplex((2, 3, 4))
    bad = _failed(rows)
    return not bad, "; ".join(bad) or "Delta_0 certified and regular for k = 2, 3, 4"


def criterion_10():
    rows = [r for r in suite_nonflat(kmax=6, trials=100, seed=10) if "row-normalized" in r["claim"]]
    bad = _failed(rows)
    values = ", ".join(f"{r['value']:.2e}" for r in rows)
    return not bad, f"min normalized |det| for k=1..6: {values}"


def _simplicial_fixtures():
    for path in sorted(fixtures_dir().glob("*.json")):
        data = json.loads(path.read_text())
        faces = {frozenset(F) for F in data["faces"]}
        d = 2 * data["k"]
        facets = [F for F in faces if not any(F < G for G in faces)]
        if all(len(F) == d for F in facets):
            f = [1] + [sum(1 for F in faces if len(F) == j + 1) for j in range(d)]
            yield path.name, data["n"], d, f


def criterion_11():
    rng = np.random.default_rng(11)
    problems = []
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        for _ in range(200):
            d = 2 * int(rng.integers(1, 5))
            h = [Fraction(int(x), int(rng.integers(1, 9))) for x in rng.integers(-100, 100, d + 1)]
            if f_to_h(h_to_f(h, d), d) != h:
                problems.append("round trip failed")
                break
    cyc = load_fixture(2, 8, "moment")
    if cyc["f_vector"][1:] != [8, 28, 40, 20]:
        problems.append(f"C_4(8) fixture has f = {cyc['f_vector'][1:]}")
    if h_to_f(cyclic_h_vector(4, 8), 4) != cyc["f_vector"]:
        problems.append("C_4(8) fixture disagrees with the Upper Bound Theorem f-vector")
    h = f_to_h(cyc["f_vector"], 4)
    if h != h[::-1] or min(h) < 0:
        problems.append(f"C_4(8) h-vector {h}")
    checked = 0
    for name, n, d, f in _simplicial_fixtures():
        hv = f_to_h(f, d)
        for j in range(d // 2 + 1):
            if hv[j] > ubt_hbound(d, n, j):
                problems.append(f"{name}: h_{j} = {hv[j]} > {ubt_hbound(d, n, j)}")
        checked += 1
    return not problems, "; ".join(problems) or f"C_4(8) h = {h}, h-bound holds on {checked} simplicial fixtures"


def _record(number, result):
    ok, detail = result
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}"
    print(line)
    ACCEPTANCE_LINES.append(line)
    return ok, detail


@pytest.mark.parametrize("number", range(1, 12))
def test_criterion(number, tmp_path):
    fn = globals()[f"criterion_{number}"]
    result = fn(tmp_path) if number in (2, 3) else fn()
    ok, detail = _record(number, result)
    assert ok, detail


if __name__ == "__main__":
    import tempfile

    with tempfile.TemporaryDirectory() as tmp:
        results = []
        for number in range(1, 12):
            fn = globals()[f"criterion_{number}"]
            results.append(_record(number, fn(tmp) if number in (2, 3) else fn())[0])
    sys.exit(0 if all(results) else 1)

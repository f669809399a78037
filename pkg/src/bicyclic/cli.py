"""Command-line front end: ``bicyclic {census,psi,verify,bounds,deform-demo}``.

Exit codes: 0 all claims pass, 1 some claim fails, 2 usage error,
3 numerical failure (root finder or LP breakdown).
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import math
import sys
import time
from dataclasses import asdict, dataclass, field
from math import comb
from pathlib import Path
from typing import Optional

import numpy as np

from .bounds import ub1_bound, ub2_bound, ubt_fbound
from .census import (
    DEFAULT_BUDGET,
    _claim,
    antipodal_edges,
    bound_checks,
    edge_density,
    enumerate_faces,
    sandwich_report,
    triples_on_short_arcs,
)
from .circle import SymmetricPointSet, equally_spaced, symmetrize
from .faces import body_face_certificate, psi_estimate, verify_body_certificate
from .hull import fixtures_dir, load_fixture
from .polytope import build
from .raked import (
    RootMultiset,
    deform,
    poly_from_multiset,
    selfinv_to_trig,
)
from .roots import RootFindingError
from .verify import B6_ARC, SUITES

SCHEMA = 1
EXIT_OK, EXIT_CLAIM, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2, 3
CSV_COLUMNS = ["n", "k", "j", "f_j", "bound", "ratio", "status"]

log = logging.getLogger("bicyclic")


@dataclass
class RunConfig:
    command: str
    k: Optional[int] = None
    n: Optional[int] = None
    angles: Optional[list[float]] = None
    cap: Optional[int] = None
    tol: Optional[float] = None
    grid: Optional[int] = None
    seed: int = 0
    suite: Optional[str] = None
    trials: Optional[int] = None
    arc: Optional[float] = None
    j: Optional[int] = None
    n_list: Optional[list[int]] = None
    eps: Optional[float] = None
    budget: int = DEFAULT_BUDGET
    workers: int = 1
    symmetry: bool = True
    fixtures: Optional[str] = None
    json_path: Optional[str] = None
    csv_path: Optional[str] = None
    plot_path: Optional[str] = None
    timing: bool = False

    def validate(self) -> None:
        for name in ("tol", "eps", "arc"):
            v = getattr(self, name)
            if v is not None and not v > 0:
                raise ValueError(f"--{name} must be positive, got {v}")
        for name in ("grid", "trials", "cap", "budget", "workers"):
            v = getattr(self, name)
            if v is not None and v < 1:
                raise ValueError(f"--{name} must be at least 1, got {v}")
        if self.k is not None and self.k < 1:
            raise ValueError(f"--k must be at least 1, got {self.k}")


@dataclass
class Report:
    config: dict
    results: dict = field(default_factory=dict)
    claims: list = field(default_factory=list)
    warnings: list = field(default_factory=list)
    timing: Optional[dict] = None

    @property
    def passed(self) -> bool:
        return all(c["pass"] for c in self.claims)

    def to_json(self) -> str:
        out = {"schema": SCHEMA, "config": self.config, "results": self.results, "claims": self.claims}
        if self.warnings:
            out["warnings"] = self.warnings
        if self.timing is not None:
            out["timing"] = self.timing
        return json.dumps(_plain(out), indent=2, sort_keys=True)


def _plain(obj):
    """Convert numpy scalars, arrays, tuples and frozensets into JSON types."""
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return sorted(_plain(v) for v in obj)
    if isinstance(obj, np.ndarray):
        return _plain(obj.tolist())
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    return obj


def _point_set(cfg: RunConfig) -> SymmetricPointSet:
    if cfg.angles:
        return symmetrize(cfg.angles)
    if cfg.n is None:
        raise ValueError("--n or --angles is required")
    return equally_spaced(cfg.n)


def _csv_bound(k: int, n: int, j: int) -> float:
    d = 2 * k
    if j == 0:
        return n
    if j == 1:
        return ub1_bound(d, n)
    if j <= k - 1:
        return ub2_bound(d, n, j)
    return ubt_fbound(d, n, j)


def _ratio_denominator(k: int, n: int, j: int) -> int:
    return comb(n, j + 1) if j <= k - 1 else comb(n, k)


# ---------------------------------------------------------------------------
# commands


def cmd_census(cfg: RunConfig) -> tuple[Report, list[dict]]:
    k = cfg.k
    cap = cfg.cap or 3
    X = _point_set(cfg)
    P = build(k, X)
    census = enumerate_faces(P, cap, budget=cfg.budget, use_symmetry=cfg.symmetry, workers=cfg.workers)
    report = Report(config=_config_echo(cfg))
    fvec = census.f_vector
    res = {
        "n": P.n,
        "dim": P.dim,
        "degenerate": P.degenerate,
        "f_vector": fvec,
        "complete_dims": census.complete_dims,
        "partial": census.partial,
        "lp_count": census.lp_count,
        "subsets_checked": census.subsets_checked,
        "notes": census.notes,
    }
    claims = [_claim("census finished within budget", int(census.partial), 0)]
    if census.is_complete(1):
        res["edge_density"] = edge_density(census)
        claims.append(_claim("no antipodal pair is an edge", len(antipodal_edges(P, census)), 0))
        claims.append(_claim("edge density <= 1 - 2^-d", res["edge_density"], 1 - 2.0 ** (-P.dim)))
        if k == 2 and not cfg.angles:
            claims.append(_claim("edge density >= 2/3", res["edge_density"], 2 / 3, ">="))
    claims.extend(bound_checks(census))
    if k == 3 and census.is_complete(2):
        short = triples_on_short_arcs(P, B6_ARC)
        certified = [T for T in short if frozenset(T) in census.faces]
        res["short_arc_triples"] = len(short)
        res["short_arc_triple_faces"] = len(certified)
        res["short_arc_triple_density"] = len(certified) / comb(P.n, 3)
        claims.append(_claim("every triple on an arc <= arccos(1/8) is a 2-face", len(short) - len(certified), 0))
    if not cfg.angles:
        fx = load_fixture(k, P.n, "sm", cfg.fixtures)
        if fx is not None:
            dims = census.complete_dims
            ref = {F for F in fx["faces"] if P.affine_rank(F) in dims}
            mine = {F for F in census.faces if census.faces[F].dimension in dims}
            res["fixture"] = str(fixtures_dir(cfg.fixtures) / f"sm{2 * k}_n{P.n}.json")
            claims.append(_claim("faces of complete dimensions match the hull fixture", len(ref ^ mine), 0))
    report.results = res
    report.claims = claims
    rows = []
    for j, fj in enumerate(fvec[1:]):
        bound = _csv_bound(k, P.n, j)
        complete = census.is_complete(j)
        status = "incomplete" if not complete else ("pass" if fj <= bound else "fail")
        rows.append(
            {"n": P.n, "k": k, "j": j, "f_j": fj, "bound": bound,
             "ratio": fj / _ratio_denominator(k, P.n, j), "status": status}
        )
    return report, rows


def cmd_psi(cfg: RunConfig) -> tuple[Report, list]:
    k = cfg.k
    if k < 2:
        raise ValueError("psi needs k >= 2")
    tol = 0.01 if cfg.tol is None else cfg.tol
    est = psi_estimate(k, tol, grid_size=cfg.grid)
    lower = (2 * k - 2) * math.pi / (2 * k - 1)
    report = Report(config=_config_echo(cfg))
    report.results = {
        "interval": [est.lo, est.hi],
        "lower_bound": lower,
        "conjectured_value": lower,
        "conjecture_note": "psi_k = (2k-2)pi/(2k-1) is conjectural for k >= 3",
        "bisection_steps": len(est.trace),
    }
    report.warnings = list(est.warnings)
    report.claims = [
        _claim("bracket width <= tol", est.hi - est.lo, tol + 1e-12),
        _claim("hi < pi", est.hi, math.pi, "<=") | {"pass": est.hi < math.pi},
        _claim("lo >= (2k-2)pi/(2k-1) - tol", est.lo, lower - tol, ">="),
    ]
    if k == 2:
        inside = est.lo - tol <= 2 * math.pi / 3 <= est.hi + tol
        report.claims.append(
            _claim("interval contains 2pi/3 within tol", 0 if inside else 1, 0)
            | {"target": 2 * math.pi / 3}
        )
    return report, [(t, int(bool(ok))) for t, ok in est.trace]


def cmd_verify(cfg: RunConfig) -> tuple[Report, list]:
    names = list(SUITES) if cfg.suite in (None, "all") else [cfg.suite]
    report = Report(config=_config_echo(cfg))
    suites = {}
    for name in names:
        rows = _run_suite(name, cfg)
        suites[name] = {"pass": all(r["pass"] for r in rows), "claims": len(rows)}
        report.claims.extend({**r, "suite": name} for r in rows)
    report.results = {"suites": suites}
    return report, []


def _run_suite(name: str, cfg: RunConfig) -> list[dict]:
    seed, trials = cfg.seed, cfg.trials
    if name == "smilansky":
        return SUITES[name](n=cfg.n or 12, fixtures=cfg.fixtures)
    if name in ("deformation", "newton"):
        ks = [cfg.k] if cfg.k else [2, 3, 4]
        return SUITES[name](trials=trials or 200, seed=seed, ks=ks)
    if name == "simplex":
        return SUITES[name](ks=[cfg.k] if cfg.k else (2, 3, 4))
    if name == "nonflat":
        return SUITES[name](kmax=cfg.k or 6, trials=trials or 100, seed=seed)
    if name == "b6":
        return SUITES[name](arc=cfg.arc or 1.4, trials=trials or 100, seed=seed)
    if name == "localization":
        return SUITES[name](k=cfg.k or 2, trials=trials or 200, arc=cfg.arc or 0.3, seed=seed)
    raise ValueError(f"unknown suite {name}")


def cmd_bounds(cfg: RunConfig) -> tuple[Report, list[dict]]:
    k = cfg.k
    j = 1 if cfg.j is None else cfg.j
    n_list = cfg.n_list or ([cfg.n] if cfg.n else [12, 24])
    table = sandwich_report(k, n_list, j, budget=cfg.budget, use_symmetry=cfg.symmetry)
    report = Report(config=_config_echo(cfg))
    report.results = {"rows": table}
    rows = []
    for r in table:
        bound = r["ubt_bound"] if r["cs_bound"] is None else min(r["ubt_bound"], r["cs_bound"])
        report.claims.append(_claim(f"n={r['n']}: f_{j} <= upper bound", r["f_j"], bound))
        report.claims.append(_claim(f"n={r['n']}: census exact", int(not r["exact"]), 0))
        status = "incomplete" if not r["exact"] else ("pass" if r["consistent"] else "fail")
        rows.append({"n": r["n"], "k": k, "j": j, "f_j": r["f_j"], "bound": bound,
                     "ratio": r["ratio"], "status": status})
    return report, rows


def cmd_deform_demo(cfg: RunConfig) -> tuple[Report, list]:
    """Deform the double roots of unity of (z^(2k-1) - 1)^2 by lambda = 1 + eps."""
    k = cfg.k
    if k < 2:
        raise ValueError("deform-demo needs k >= 2")
    eps = 0.01 if cfg.eps is None else cfg.eps
    m = 2 * k - 1
    unity = [complex(math.cos(2 * math.pi * j / m), math.sin(2 * math.pi * j / m)) for j in range(m)]
    M = RootMultiset.from_list(unity + unity)
    Ml = deform(M, 1 + eps)
    D = poly_from_multiset(Ml)
    A = selfinv_to_trig(D)
    if A.c < 0:
        A = type(A)(A.k, -A.c, -A.a, -A.b)
    ang, mult = Ml.circle_angles()
    predicted = []
    for j in range(1, m):
        a = math.acos((1 + eps) * math.cos(2 * math.pi * j / m))
        predicted.append(a if j <= k - 1 else 2 * math.pi - a)
    predicted = np.sort(predicted)
    alphas = np.sort(ang)
    report = Report(config=_config_echo(cfg))
    ok_face, why, _ = verify_body_certificate(A, alphas)
    edge = [float(alphas[0]), float(alphas[k - 1])]
    edge_cert = body_face_certificate(k, edge, grid_size=cfg.grid)
    arc = edge[1] - edge[0]
    report.results = {
        "lambda": 1 + eps,
        "alphas": alphas,
        "multiplicities": mult,
        "predicted_alphas": predicted,
        "real_roots": [float(z.real) for z in Ml.values if abs(z.imag) < 1e-9 and abs(abs(z) - 1) > 1e-6],
        "edge_endpoints": edge,
        "edge_arc": arc,
        "limit_arc": (2 * k - 2) * math.pi / m,
    }
    report.claims = [
        _claim("D_lambda is raked (relative odd coefficients)", D.raked_residual(), 1e-8),
        _claim("2k-2 double roots on the circle", int(len(alphas) != m - 1 or np.any(mult != 2)), 0),
        _claim("alpha_j = arccos((1+eps) cos(2 pi j/(2k-1)))", float(np.abs(alphas - predicted).max()) if len(alphas) == len(predicted) else math.inf, 1e-8),
        _claim("deformed polynomial certifies the (2k-2)-point face", int(not ok_face), 0),
        _claim("[SM(alpha_1), SM(alpha_k)] has an edge certificate", int(not edge_cert), 0),
    ]
    if why:
        report.warnings.append(why)
    plot = [(float(z.real), float(z.imag)) for z in Ml.expanded()]
    return report, plot


COMMANDS = {
    "census": cmd_census,
    "psi": cmd_psi,
    "verify": cmd_verify,
    "bounds": cmd_bounds,
    "deform-demo": cmd_deform_demo,
}


# ---------------------------------------------------------------------------
# argument parsing and output


def _float_list(text: str) -> list[float]:
    return [float(x) for x in text.split(",") if x.strip()]


def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bicyclic", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_k=True):
        p.add_argument("--k", type=int, required=needs_k, default=None)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--json", dest="json_path", metavar="PATH")
        p.add_argument("--csv", dest="csv_path", metavar="PATH")
        p.add_argument("--plot-data", dest="plot_path", metavar="PATH")
        p.add_argument("--fixtures", metavar="DIR")
        p.add_argument("--grid", type=int)
        p.add_argument("--timing", action="store_true", help="include wall-clock timing in the JSON report")

    p = sub.add_parser("census", help="face census of B_2k(X)")
    common(p)
    p.add_argument("--n", type=int)
    p.add_argument("--angles", type=_float_list, help="comma-separated angles; closed under +pi")
    p.add_argument("--cap", type=int, default=3)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--no-symmetry", dest="symmetry", action="store_false")

    p = sub.add_parser("psi", help="bracket the edge threshold psi_k")
    common(p)
    p.add_argument("--tol", type=float, default=0.01)

    p = sub.add_parser("verify", help="run the invariant suites")
    common(p, needs_k=False)
    p.add_argument("--suite", choices=["all", *SUITES], default="all")
    p.add_argument("--n", type=int)
    p.add_argument("--trials", type=int)
    p.add_argument("--arc", type=float)

    p = sub.add_parser("bounds", help="f_j against the upper bounds")
    common(p)
    p.add_argument("--n", dest="n_list", type=_int_list, help="comma-separated point counts")
    p.add_argument("--j", type=int, default=1)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--no-symmetry", dest="symmetry", action="store_false")

    p = sub.add_parser("deform-demo", help="deformation of the simplicial face Delta_0")
    common(p)
    p.add_argument("--eps", type=float, default=0.01)
    return parser


def _config_echo(cfg: RunConfig) -> dict:
    echo = {k: v for k, v in asdict(cfg).items() if v is not None}
    for key in ("json_path", "csv_path", "plot_path", "timing"):
        echo.pop(key, None)
    return echo


def _write_outputs(cfg: RunConfig, report: Report, rows: list, plot: list) -> None:
    if cfg.json_path:
        Path(cfg.json_path).write_text(report.to_json() + "\n")
    if cfg.csv_path and rows:
        with open(cfg.csv_path, "w", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=CSV_COLUMNS)
            writer.writeheader()
            writer.writerows(rows)
    if cfg.plot_path and plot:
        with open(cfg.plot_path, "w") as fh:
            for x, y in plot:
                fh.write(f"{x!r} {y!r}\n")


def _print_summary(report: Report) -> None:
    for key, value in report.results.items():
        if key in ("rows", "suites", "notes"):
            continue
        print(f"{key}: {json.dumps(_plain(value))}")
    for w in report.warnings:
        print(f"warning: {w}", file=sys.stderr)
    for c in report.claims:
        flag = "PASS" if c["pass"] else "FAIL"
        prefix = f"[{c['suite']}] " if "suite" in c else ""
        print(f"{flag}  {prefix}{c['claim']}: value={c['value']!r} bound={c['bound']!r} margin={c['margin']!r}")


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    fields = {f for f in RunConfig.__dataclass_fields__}
    cfg = RunConfig(**{k: v for k, v in vars(args).items() if k in fields})
    if args.command == "bounds" and cfg.n_list and len(cfg.n_list) == 1:
        cfg.n = cfg.n_list[0]
    try:
        cfg.validate()
        start = time.perf_counter()
        out = COMMANDS[args.command](cfg)
        report, extra = out
        if cfg.timing:
            report.timing = {"seconds": time.perf_counter() - start}
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (RootFindingError, np.linalg.LinAlgError, ArithmeticError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    rows = extra if extra and isinstance(extra[0], dict) else []
    plot = extra if extra and not isinstance(extra[0], dict) else []
    if args.command == "census" and not plot:
        plot = [(r["j"], r["f_j"]) for r in rows]
    _write_outputs(cfg, report, rows, plot)
    _print_summary(report)
    return EXIT_OK if report.passed else EXIT_CLAIM


if __name__ == "__main__":
    sys.exit(main())

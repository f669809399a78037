"""Face densities of bicyclic polytopes on equally spaced points.

    python3 scripts/density_experiments.py --out results/densities.csv

For B_4 the edge density f_1 / C(n, 2) is tracked against its limit 2/3; for
B_6 the fraction of triples that span 2-faces is listed next to the fraction
lying on arcs of length at most arccos(1/8), whose limit is
3 (arccos(1/8) / 2pi)^2.
"""

from __future__ import annotations

import argparse
import csv
import math
from dataclasses import dataclass, field
from math import comb
from pathlib import Path

from bicyclic.bounds import ub1_bound
from bicyclic.census import edge_density, enumerate_faces, triples_on_short_arcs
from bicyclic.circle import equally_spaced
from bicyclic.polytope import build

SHORT_ARC = math.acos(1 / 8)


@dataclass
class DensityConfig:
    b4_sizes: list[int] = field(default_factory=lambda: [12, 24, 36, 48, 60])
    b6_sizes: list[int] = field(default_factory=lambda: [12, 18, 24, 30])
    workers: int = 1
    out: Path = Path("results/densities.csv")


def b4_rows(cfg: DensityConfig) -> list[dict]:
    rows = []
    for n in cfg.b4_sizes:
        census = enumerate_faces(build(2, equally_spaced(n), check_vertices=False), 2, workers=cfg.workers)
        rows.append(
            {
                "k": 2, "n": n, "j": 1, "f_j": census.f(1),
                "density": edge_density(census),
                "upper": ub1_bound(4, n) / comb(n, 2),
                "limit": 2 / 3,
            }
        )
        print(f"B_4 n={n}: edge density {rows[-1]['density']:.4f}")
    return rows


def b6_rows(cfg: DensityConfig) -> list[dict]:
    rows = []
    limit = 3 * (SHORT_ARC / (2 * math.pi)) ** 2
    for n in cfg.b6_sizes:
        P = build(3, equally_spaced(n), check_vertices=False)
        census = enumerate_faces(P, 3, workers=cfg.workers)
        short = triples_on_short_arcs(P, SHORT_ARC)
        rows.append(
            {
                "k": 3, "n": n, "j": 2, "f_j": census.f(2),
                "density": census.f(2) / comb(n, 3),
                "short_arc_density": sum(frozenset(T) in census.faces for T in short) / comb(n, 3),
                "limit": limit,
            }
        )
        print(f"B_6 n={n}: 2-face density {rows[-1]['density']:.4f}, short-arc part {rows[-1]['short_arc_density']:.4f}")
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--b4", type=lambda s: [int(x) for x in s.split(",")], default=None)
    ap.add_argument("--b6", type=lambda s: [int(x) for x in s.split(",")], default=None)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--out", type=Path, default=DensityConfig.out)
    args = ap.parse_args()
    cfg = DensityConfig(workers=args.workers, out=args.out)
    if args.b4:
        cfg.b4_sizes = args.b4
    if args.b6:
        cfg.b6_sizes = args.b6
    rows = b4_rows(cfg) + b6_rows(cfg)
    cfg.out.parent.mkdir(parents=True, exist_ok=True)
    fields = ["k", "n", "j", "f_j", "density", "short_arc_density", "upper", "limit"]
    with open(cfg.out, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=fields)
        writer.writeheader()
        writer.writerows(rows)


if __name__ == "__main__":
    main()

"""Bracket the edge threshold psi_k for a range of k.

    python3 scripts/psi_sweep.py --kmax 5 --tol 0.01 --out results/psi.csv

Alongside each bracket the table lists the proven lower bound
(2k-2)pi/(2k-1), which is also the conjectured value of psi_k.
"""

from __future__ import annotations

import argparse
import csv
import math
import time
from dataclasses import dataclass
from pathlib import Path

from bicyclic.faces import psi_estimate


@dataclass
class SweepConfig:
    kmin: int = 2
    kmax: int = 5
    tol: float = 0.01
    grid: int | None = None
    out: Path = Path("results/psi.csv")


def run(cfg: SweepConfig) -> list[dict]:
    rows = []
    for k in range(cfg.kmin, cfg.kmax + 1):
        start = time.perf_counter()
        est = psi_estimate(k, cfg.tol, grid_size=cfg.grid)
        lower = (2 * k - 2) * math.pi / (2 * k - 1)
        rows.append(
            {
                "k": k,
                "lo": est.lo,
                "hi": est.hi,
                "lower_bound": lower,
                "lo_minus_bound": est.lo - lower,
                "probes": len(est.trace),
                "warnings": len(est.warnings),
                "seconds": round(time.perf_counter() - start, 2),
            }
        )
        print(f"k={k}: psi in [{est.lo:.5f}, {est.hi:.5f}], (2k-2)pi/(2k-1) = {lower:.5f}")
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--kmin", type=int, default=2)
    ap.add_argument("--kmax", type=int, default=5)
    ap.add_argument("--tol", type=float, default=0.01)
    ap.add_argument("--grid", type=int)
    ap.add_argument("--out", type=Path, default=SweepConfig.out)
    cfg = SweepConfig(**vars(ap.parse_args()))
    rows = run(cfg)
    cfg.out.parent.mkdir(parents=True, exist_ok=True)
    with open(cfg.out, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=list(rows[0]))
        writer.writeheader()
        writer.writerows(rows)
    # two-column plot data: k against the bracket midpoint
    with open(cfg.out.with_suffix(".dat"), "w") as fh:
        for r in rows:
            fh.write(f"{r['k']} {(r['lo'] + r['hi']) / 2!r}\n")


if __name__ == "__main__":
    main()

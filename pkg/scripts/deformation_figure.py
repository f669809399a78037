"""Plot data for the deformation of the doubled roots of unity of degree 2k-1.

    python3 scripts/deformation_figure.py --k 3 --eps 0.05 --out results/deform

Writes ``<out>_before.dat`` and ``<out>_after.dat`` with the real and
imaginary parts of the roots, one root per line.
"""

from __future__ import annotations

import argparse
import math
from pathlib import Path

from bicyclic.raked import RootMultiset, deform


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--k", type=int, default=3)
    ap.add_argument("--eps", type=float, default=0.05)
    ap.add_argument("--out", type=Path, default=Path("results/deform"))
    args = ap.parse_args()
    m = 2 * args.k - 1
    unity = [complex(math.cos(2 * math.pi * j / m), math.sin(2 * math.pi * j / m)) for j in range(m)]
    before = RootMultiset.from_list(unity + unity)
    after = deform(before, 1 + args.eps)
    args.out.parent.mkdir(parents=True, exist_ok=True)
    for tag, M in (("before", before), ("after", after)):
        with open(f"{args.out}_{tag}.dat", "w") as fh:
            for z, mult in zip(M.values, M.mult):
                fh.write(f"{float(z.real)!r} {float(z.imag)!r} {int(mult)}\n")
    print(f"{len(after.values)} distinct deformed roots written to {args.out}_after.dat")


if __name__ == "__main__":
    main()

"""Regenerate the committed hull fixtures with Qhull.

    python3 scripts/make_hull_fixtures.py [--out DIR]

Each file holds every nonempty proper face (as vertex indices) of one point
configuration: bicyclic polytopes on equally spaced or random symmetric angle
sets, and cyclic polytopes on the moment curve (t, t^2, ..., t^d).
"""

from __future__ import annotations

import argparse
from pathlib import Path

import numpy as np

from bicyclic.circle import equally_spaced, symmetrize
from bicyclic.curve import sm_coords
from bicyclic.hull import BUNDLED, f_vector, face_lattice, fixture_name, write_fixture

EQUALLY_SPACED = {2: [6, 8, 12, 18, 24, 30, 36], 3: [12, 24, 30]}
RANDOM_SYMMETRIC = {2: [10, 16], 3: [14]}
MOMENT = {4: [8, 10], 6: [10]}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=BUNDLED)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    for k, ns in EQUALLY_SPACED.items():
        for n in ns:
            angles = equally_spaced(n).as_array()
            _emit(args.out, "sm", k, n, sm_coords(k, angles), angles=angles.tolist())

    rng = np.random.default_rng(args.seed)
    for k, ns in RANDOM_SYMMETRIC.items():
        for n in ns:
            angles = symmetrize(rng.uniform(0, np.pi, n // 2)).as_array()
            _emit(args.out, "smrand", k, n, sm_coords(k, angles), angles=angles.tolist(), seed=args.seed)

    for d, ns in MOMENT.items():
        for n in ns:
            t = np.linspace(-1.0, 1.0, n)
            pts = np.vander(t, d + 1, increasing=True)[:, 1:]
            _emit(args.out, "moment", d // 2, n, pts, params=t.tolist())


def _emit(out: Path, curve: str, k: int, n: int, pts: np.ndarray, **extra) -> None:
    faces = face_lattice(pts)
    fv = f_vector(pts, faces)
    write_fixture(out / fixture_name(k, n, curve), n, k, faces, curve=curve, f_vector=fv, **extra)
    print(f"{fixture_name(k, n, curve):22s} f = {fv}")


if __name__ == "__main__":
    main()

"""Independent face-lattice oracle from Qhull, and the JSON fixture format.

Qhull returns a triangulated hull; facets are recovered as the full sets of
points lying on each supporting hyperplane, and lower faces as intersections
of facets.  This route shares no code with the LP face oracle.
"""

from __future__ import annotations

import json
import os
from pathlib import Path
from typing import Iterable

import numpy as np
from scipy.spatial import ConvexHull

FIXTURE_ENV = "BICYCLIC_FIXTURES"
BUNDLED = Path(__file__).parent / "data" / "hulls"


def _full_dimensional(points: np.ndarray, tol: float = 1e-9) -> np.ndarray:
    """Coordinates of ``points`` in an orthonormal frame of their affine hull."""
    centred = points - points.mean(axis=0)
    _, sv, vt = np.linalg.svd(centred, full_matrices=False)
    r = int(np.sum(sv > tol * max(1.0, sv[0])))
    return centred @ vt[:r].T


def facet_vertex_sets(points: np.ndarray, tol: float = 1e-9) -> list[frozenset[int]]:
    points = _full_dimensional(np.asarray(points, dtype=float))
    if points.shape[1] == 0:
        return []
    if points.shape[1] == 1:
        x = points[:, 0]
        return [frozenset(np.nonzero(np.abs(x - x.min()) < tol)[0].tolist()),
                frozenset(np.nonzero(np.abs(x - x.max()) < tol)[0].tolist())]
    hull = ConvexHull(points, qhull_options="Qt Q12")
    eqs = hull.equations
    facets = set()
    for eq in eqs:
        vals = points @ eq[:-1] + eq[-1]
        facets.add(frozenset(int(i) for i in np.nonzero(np.abs(vals) < tol)[0]))
    return sorted(facets, key=lambda f: (len(f), sorted(f)))


def face_lattice(points: np.ndarray, tol: float = 1e-9) -> list[frozenset[int]]:
    """All nonempty proper faces of conv(points), as vertex-index sets.

    Every proper face is an intersection of facets; the closure under pairwise
    intersection with facets is computed level by level.
    """
    facets = facet_vertex_sets(points, tol)
    faces = set(facets)
    frontier = set(facets)
    while frontier:
        new = set()
        for F in frontier:
            for G in facets:
                H = F & G
                if H and H not in faces:
                    new.add(H)
        faces |= new
        frontier = new
    return sorted(faces, key=lambda f: (len(f), sorted(f)))


def affine_dim(points: np.ndarray, face: Iterable[int]) -> int:
    idx = sorted(face)
    if len(idx) <= 1:
        return 0
    pts = points[idx]
    return int(np.linalg.matrix_rank(pts[1:] - pts[0], tol=1e-9))


def f_vector(points: np.ndarray, faces) -> list[int]:
    """(f_-1, f_0, ..., f_{d-1}) from a face list."""
    d = np.linalg.matrix_rank(points[1:] - points[0], tol=1e-9)
    f = [1] + [0] * d
    for F in faces:
        f[affine_dim(points, F) + 1] += 1
    return f


def write_fixture(path: Path, n: int, k: int, faces, **extra) -> None:
    payload = {"n": n, "k": k, **extra, "faces": [sorted(F) for F in faces]}
    Path(path).write_text(json.dumps(payload, separators=(",", ":")) + "\n")


def fixtures_dir(explicit: str | os.PathLike | None = None) -> Path:
    """--fixtures beats $BICYCLIC_FIXTURES beats the copies shipped with the package."""
    if explicit:
        return Path(explicit)
    env = os.environ.get(FIXTURE_ENV)
    if env:
        return Path(env)
    return BUNDLED


def fixture_name(k: int, n: int, curve: str = "sm") -> str:
    return f"{curve}{2 * k}_n{n}.json"


def load_fixture(k: int, n: int, curve: str = "sm", directory=None) -> dict | None:
    path = fixtures_dir(directory) / fixture_name(k, n, curve)
    if not path.exists():
        return None
    data = json.loads(path.read_text())
    data["faces"] = [frozenset(F) for F in data["faces"]]
    return data

"""Points on the circle R/2piZ and centrally symmetric finite subsets of it."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

TWO_PI = 2.0 * math.pi

# Two angles closer than this are treated as the same point of the circle.
ANGLE_TOL = 1e-10

AnglePoint = float


def normalize(theta: float) -> float:
    """Canonical representative of ``theta`` in [0, 2pi)."""
    r = math.fmod(theta, TWO_PI)
    if r < 0.0:
        r += TWO_PI
    # fmod can return exactly 2pi after the shift for tiny negative inputs
    if r >= TWO_PI:
        r -= TWO_PI
    return r


def antipode(theta: float) -> float:
    return normalize(theta + math.pi)


def arc_distance(a: float, b: float) -> float:
    """Length of the shorter arc between ``a`` and ``b``, in [0, pi]."""
    d = abs(normalize(a) - normalize(b))
    return min(d, TWO_PI - d)


def arc_span(angles: Iterable[float]) -> float:
    """Length of the shortest closed arc containing all ``angles``.

    Equals 2pi minus the largest gap between cyclically consecutive points.
    """
    pts = sorted(normalize(t) for t in angles)
    if len(pts) <= 1:
        return 0.0
    gaps = [b - a for a, b in zip(pts, pts[1:])]
    gaps.append(pts[0] + TWO_PI - pts[-1])
    return TWO_PI - max(gaps)


@dataclass(frozen=True)
class SymmetricPointSet:
    """A finite antipode-closed subset of the circle, sorted by angle."""

    points: tuple[float, ...]

    def __post_init__(self) -> None:
        pts = self.points
        if len(pts) == 0 or len(pts) % 2:
            raise ValueError(f"a symmetric point set has even positive size, got {len(pts)}")
        for a, b in zip(pts, pts[1:] + (pts[0] + TWO_PI,)):
            if not b - a > ANGLE_TOL:
                raise ValueError("points must be distinct and sorted")
        for t in pts:
            if min(arc_distance(antipode(t), s) for s in pts) >= ANGLE_TOL:
                raise ValueError(f"antipode of {t!r} is missing")

    @property
    def n(self) -> int:
        return len(self.points)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.points, dtype=float)

    def antipode_index(self) -> list[int]:
        """``idx[i]`` is the position of the antipode of point ``i``."""
        arr = self.as_array()
        out = []
        for t in arr:
            d = np.abs(np.angle(np.exp(1j * (arr - t - math.pi))))
            out.append(int(np.argmin(d)))
        return out

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)


def equally_spaced(n: int) -> SymmetricPointSet:
    """The ``n`` points 2*pi*j/n, j = 0..n-1 (``n`` even)."""
    if n < 2 or n % 2:
        raise ValueError(f"n must be an even integer >= 2, got {n}")
    return SymmetricPointSet(tuple(TWO_PI * j / n for j in range(n)))


def symmetrize(ys: Iterable[float], tol: float = ANGLE_TOL) -> SymmetricPointSet:
    """Return Y union (Y + pi), rejecting inputs that would collide."""
    ys = [normalize(y) for y in ys]
    if not ys:
        raise ValueError("cannot symmetrize an empty set")
    pts = sorted(ys + [antipode(y) for y in ys])
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if arc_distance(pts[i], pts[j]) < tol:
                raise ValueError(
                    f"points {pts[i]!r} and {pts[j]!r} coincide after adding antipodes"
                )
    return SymmetricPointSet(tuple(pts))

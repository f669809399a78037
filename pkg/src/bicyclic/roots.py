"""Simultaneous polynomial root finding (Aberth-Ehrlich) and root clustering."""

from __future__ import annotations

import math

import numpy as np

EPS = np.finfo(float).eps


class RootFindingError(RuntimeError):
    """The iteration did not converge within the allotted iterations."""


def trim(coeffs: np.ndarray, rel: float = 1e-14) -> tuple[np.ndarray, int]:
    """Drop negligible coefficients at both ends of an ascending coefficient vector.

    Returns the trimmed vector and the number of zero roots that were factored out.
    """
    c = np.asarray(coeffs, dtype=complex)
    scale = np.abs(c).max() if c.size else 0.0
    if scale == 0.0:
        raise ValueError("zero polynomial has no finite root set")
    nz = np.nonzero(np.abs(c) > rel * scale)[0]
    lo, hi = nz[0], nz[-1]
    return c[lo : hi + 1], int(lo)


def _initial_guesses(c: np.ndarray) -> np.ndarray:
    # points on a circle whose radius is the geometric mean root modulus,
    # rotated off the real axis so symmetric inputs do not start degenerate
    m = c.size - 1
    r = abs(c[0] / c[-1]) ** (1.0 / m)
    ang = 2.0 * math.pi * np.arange(m) / m + 0.4
    return r * np.exp(1j * ang)


def aberth(coeffs, max_iter: int = 200, tol: float = 1e-13) -> np.ndarray:
    """All roots of the polynomial with ascending coefficients ``coeffs``.

    A root estimate is frozen once its Aberth correction drops below ``tol``
    (relative) or the polynomial value there is at rounding level; the second
    test is what lets clusters of multiple roots terminate.
    """
    c, nzero = trim(coeffs)
    m = c.size - 1
    if m == 0:
        return np.zeros(nzero, dtype=complex)
    desc = c[::-1]
    dpoly = np.polyder(desc)
    absdesc = np.abs(desc)
    z = _initial_guesses(c)
    active = np.ones(m, dtype=bool)
    for _ in range(max_iter):
        idx = np.nonzero(active)[0]
        if idx.size == 0:
            break
        zi = z[idx]
        p = np.polyval(desc, zi)
        bound = np.polyval(absdesc, np.abs(zi)) * EPS * 4 * m
        done = np.abs(p) <= bound
        dp = np.polyval(dpoly, zi)
        diff = zi[:, None] - z[None, :]
        diff[np.arange(idx.size), idx] = 1.0
        s = (1.0 / diff).sum(axis=1) - 1.0
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = p / dp
            w = ratio / (1.0 - ratio * s)
        w = np.where(np.isfinite(w), w, 0.0)
        w[done] = 0.0
        z[idx] = zi - w
        small = np.abs(w) <= tol * np.maximum(1.0, np.abs(zi))
        active[idx[done | small]] = False
    else:
        if active.any():
            raise RootFindingError(
                f"{int(active.sum())} of {m} roots unconverged after {max_iter} iterations"
            )
    if nzero:
        z = np.concatenate([z, np.zeros(nzero, dtype=complex)])
    return z


def cluster(values: np.ndarray, radius: float) -> tuple[np.ndarray, np.ndarray]:
    """Single-linkage clustering of complex points.

    Returns cluster centres (means) and cluster sizes, sorted by angle then modulus.
    """
    vals = np.asarray(values, dtype=complex)
    n = vals.size
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if abs(vals[i] - vals[j]) < radius:
                parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    centres = np.array([vals[g].mean() for g in groups.values()], dtype=complex)
    sizes = np.array([len(g) for g in groups.values()], dtype=int)
    ang = np.mod(np.angle(centres), 2 * math.pi)
    ang[ang > 2 * math.pi - 1e-12] = 0.0
    order = np.lexsort((np.abs(centres), np.round(ang, 12)))
    return centres[order], sizes[order]

"""The symmetric moment curve SM_2k(t) = (cos t, sin t, cos 3t, sin 3t, ...).

Only odd frequencies appear, so SM_2k(t + pi) = -SM_2k(t).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .circle import normalize


def frequencies(k: int) -> np.ndarray:
    """The odd frequencies 1, 3, ..., 2k-1."""
    return 2 * np.arange(1, k + 1) - 1


def _check_k(k: int) -> None:
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")


@dataclass(frozen=True)
class CurvePoint:
    k: int
    coords: np.ndarray
    source_angle: float


def sm_coords(k: int, t) -> np.ndarray:
    """Vectorised curve evaluation; returns shape (..., 2k)."""
    _check_k(k)
    t = np.asarray(t, dtype=float)
    ph = t[..., None] * frequencies(k)
    out = np.empty(t.shape + (2 * k,))
    out[..., 0::2] = np.cos(ph)
    out[..., 1::2] = np.sin(ph)
    return out


def sm_eval(k: int, t: float) -> CurvePoint:
    return CurvePoint(k, sm_coords(k, t), normalize(t))


def sm_derivative(k: int, t: float, order: int) -> np.ndarray:
    """``order``-th derivative of SM_2k at ``t``, in closed form.

    d^r/dt^r cos(mt) = m^r cos(mt + r*pi/2), and likewise for sin.
    """
    _check_k(k)
    if not 0 <= order <= 2 * k - 1:
        raise ValueError(f"order must lie in [0, {2 * k - 1}], got {order}")
    m = frequencies(k).astype(float)
    # exact quarter-turn phases avoid cos(pi/2) ~ 6e-17 noise
    c = _exact_cos(m * t, order)
    s = _exact_sin(m * t, order)
    out = np.empty(2 * k)
    out[0::2] = m**order * c
    out[1::2] = m**order * s
    return out


def _exact_cos(x: np.ndarray, quarter_turns: int) -> np.ndarray:
    q = quarter_turns % 4
    return [np.cos(x), -np.sin(x), -np.cos(x), np.sin(x)][q]


def _exact_sin(x: np.ndarray, quarter_turns: int) -> np.ndarray:
    q = quarter_turns % 4
    return [np.sin(x), np.cos(x), -np.sin(x), -np.cos(x)][q]


def derivative_matrix(k: int, t: float) -> np.ndarray:
    """Rows are the derivatives of orders 0..2k-1 at ``t``."""
    return np.vstack([sm_derivative(k, t, r) for r in range(2 * k)])


def nonflatness_check(k: int, t: float, normalize_rows: bool = True) -> float:
    """|det| of the osculating frame of the curve at ``t``.

    With ``normalize_rows`` each derivative is scaled to unit length first,
    which keeps the value O(1) despite the (2k-1)^r growth of the rows.
    The value does not depend on ``t``: rotations of the curve are orthogonal.
    """
    mat = derivative_matrix(k, t)
    if normalize_rows:
        mat = mat / np.linalg.norm(mat, axis=1, keepdims=True)
    # numpy's det runs LU with partial pivoting
    return float(abs(np.linalg.det(mat)))


def rotation_matrix(k: int, tau: float) -> np.ndarray:
    """Block-diagonal orthogonal map R with R @ SM(t) = SM(t + tau)."""
    _check_k(k)
    R = np.zeros((2 * k, 2 * k))
    for j, m in enumerate(frequencies(k)):
        c, s = math.cos(m * tau), math.sin(m * tau)
        R[2 * j : 2 * j + 2, 2 * j : 2 * j + 2] = [[c, -s], [s, c]]
    return R

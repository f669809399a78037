"""Face-number bounds: the centrally symmetric edge and j-face bounds, the
Upper Bound Theorem h-bounds, and the f <-> h transform."""

from __future__ import annotations

import warnings
from fractions import Fraction
from math import comb
from typing import Sequence


def ub1_bound(d: int, n: int) -> float:
    """f_1(P) <= n^2/2 (1 - 2^-d) for a cs d-polytope with n vertices."""
    if d < 2 or d % 2 or n < 2:
        raise ValueError(f"need even d >= 2 and n >= 2, got d={d}, n={n}")
    return n * n * (1.0 - 2.0**-d) / 2.0


def ub2_bound(d: int, n: int, j: int) -> float:
    """f_j(P) <= n/(n-1) (1 - 2^-d) C(n, j+1) for 1 <= j <= (d-2)/2."""
    if d < 2 or d % 2 or n < 2:
        raise ValueError(f"need even d >= 2 and n >= 2, got d={d}, n={n}")
    if not 1 <= j <= (d - 2) // 2:
        raise ValueError(f"j must lie in [1, {(d - 2) // 2}], got {j}")
    return n / (n - 1) * (1.0 - 2.0**-d) * comb(n, j + 1)


def ubt_hbound(d: int, n: int, j: int) -> int:
    """McMullen's bound h_j <= C(n - d + j - 1, j), 0 <= j <= d/2."""
    if not 0 <= j <= d // 2:
        raise ValueError(f"j must lie in [0, {d // 2}], got {j}")
    if n < d + 1:
        raise ValueError(f"a d-polytope has at least d+1 vertices, got n={n}")
    return comb(n - d + j - 1, j)


def f_to_h(f: Sequence, d: int) -> list:
    """h-vector from (f_-1, f_0, ..., f_{d-1}) via sum h_i x^(d-i) = sum f_(i-1) (x-1)^(d-i).

    Exact for integer or Fraction input.  A warning is issued when the result
    violates h_j = h_(d-j), i.e. the input cannot be a simplicial polytope.
    """
    if len(f) != d + 1:
        raise ValueError(f"expected {d + 1} entries f_-1..f_(d-1), got {len(f)}")
    h = [
        sum((-1) ** (j - i) * comb(d - i, j - i) * f[i] for i in range(j + 1))
        for j in range(d + 1)
    ]
    if h != h[::-1]:
        warnings.warn("h-vector is not symmetric; input is not simplicial", stacklevel=2)
    return h


def h_to_f(h: Sequence, d: int) -> list:
    """(f_-1, ..., f_{d-1}) from h via f_(j-1) = sum_{i<=j} C(d-i, d-j) h_i."""
    if len(h) != d + 1:
        raise ValueError(f"expected {d + 1} entries h_0..h_d, got {len(h)}")
    return [sum(comb(d - i, d - j) * h[i] for i in range(j + 1)) for j in range(d + 1)]


def cyclic_h_vector(d: int, n: int) -> list[int]:
    """h-vector of the cyclic polytope C_d(n): the UBT bounds, made symmetric."""
    half = [ubt_hbound(d, n, j) for j in range(d // 2 + 1)]
    return [half[min(j, d - j)] for j in range(d + 1)]


def ubt_fbound(d: int, n: int, j: int) -> int:
    """Upper Bound Theorem: f_j of any d-polytope with n vertices is at most f_j(C_d(n))."""
    if not -1 <= j <= d - 1:
        raise ValueError(f"j must lie in [-1, {d - 1}], got {j}")
    return h_to_f(cyclic_h_vector(d, n), d)[j + 1]


def as_fractions(values) -> list[Fraction]:
    return [Fraction(v) for v in values]

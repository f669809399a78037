"""Bicyclic polytopes B_2k(X) = conv(SM_2k(X))."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .circle import ANGLE_TOL, SymmetricPointSet, antipode, arc_distance, normalize
from .curve import sm_coords


@dataclass(frozen=True)
class Polytope:
    """Vertex data of B_2k(X); vertex ``i`` is SM_2k(angles[i])."""

    k: int
    angles: np.ndarray
    coords: np.ndarray
    centrally_symmetric: bool
    degenerate: bool = False
    non_vertices: tuple[int, ...] = field(default=())

    @property
    def n(self) -> int:
        return self.angles.size

    @property
    def dim(self) -> int:
        return 2 * self.k

    def antipode_index(self) -> list[int] | None:
        if not self.centrally_symmetric:
            return None
        out = []
        for t in self.angles:
            d = [arc_distance(antipode(t), s) for s in self.angles]
            out.append(int(np.argmin(d)))
        return out

    def affine_rank(self, S) -> int:
        """Dimension of the affine hull of the vertices in ``S``."""
        S = sorted(S)
        if len(S) <= 1:
            return 0
        pts = self.coords[S]
        return int(np.linalg.matrix_rank(pts[1:] - pts[0], tol=1e-9))

    def symmetries(self) -> list["Symmetry"]:
        """Maps t -> sign * t + tau that permute X, with their vertex permutations.

        Both kinds act on the curve by orthogonal maps (see :meth:`Symmetry.linear`),
        so they are affine automorphisms of B_2k(X) and carry faces to faces.
        """
        ang = self.angles
        n = ang.size
        out = {}
        for sign in (1, -1):
            for j in range(n):
                tau = normalize(ang[j] - sign * ang[0])
                perm = []
                for t in ang:
                    d = np.abs(np.angle(np.exp(1j * (ang - (sign * t + tau)))))
                    i = int(np.argmin(d))
                    if d[i] > 1e-9:
                        break
                    perm.append(i)
                if len(perm) == n and len(set(perm)) == n:
                    out.setdefault(tuple(perm), Symmetry(tuple(perm), sign, tau))
        return [out[p] for p in sorted(out)]


@dataclass(frozen=True)
class Symmetry:
    perm: tuple[int, ...]
    sign: int
    tau: float

    def linear(self, k: int) -> np.ndarray:
        """Orthogonal Q with SM_2k(sign * t + tau) = Q @ SM_2k(t)."""
        from .curve import rotation_matrix

        flip = np.ones(2 * k)
        flip[1::2] = self.sign
        return rotation_matrix(k, self.tau) @ np.diag(flip)

    def apply(self, S) -> tuple[int, ...]:
        return tuple(sorted(self.perm[i] for i in S))


def build(k: int, X, check_vertices: bool = True) -> Polytope:
    """Construct B_2k(X); with ``check_vertices`` every point gets a vertex LP."""
    if isinstance(X, SymmetricPointSet):
        angles = X.as_array()
        cs = True
    else:
        angles = np.array(sorted(normalize(t) for t in X), dtype=float)
        cs = _antipode_closed(angles)
    for a, b in itertools.combinations(angles, 2):
        if arc_distance(a, b) < ANGLE_TOL:
            raise ValueError(f"duplicate angle {a!r}")
    coords = sm_coords(k, angles)
    P = Polytope(k, angles, coords, cs)
    degenerate = P.affine_rank(range(P.n)) < 2 * k
    non_vertices: tuple[int, ...] = ()
    if check_vertices and P.n > 1:
        from .faces import is_face

        non_vertices = tuple(i for i in range(P.n) if is_face(P, [i]) is None)
    return Polytope(k, angles, coords, cs, degenerate, non_vertices)


def _antipode_closed(angles: np.ndarray) -> bool:
    return all(
        min(arc_distance(antipode(t), s) for s in angles) < ANGLE_TOL for t in angles
    ) and angles.size % 2 == 0

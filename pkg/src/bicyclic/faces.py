"""Face decisions with LP certificates.

Two settings are covered:

* the polytope B_2k(X): a vertex subset S spans a face iff some affine
  functional vanishes on S and is positive on the other vertices;
* the body B_2k = conv(SM_2k(S^1)): points T span a face iff some raked
  trigonometric polynomial is nonnegative and vanishes exactly on T.  The LP
  only proposes a polynomial on a grid; the certificate is accepted after its
  self-inversive image is shown to have its unit-circle roots exactly at T,
  each with even multiplicity.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np
from scipy.linalg import null_space

from .circle import arc_distance, normalize
from .lp import LinearProgram, lp_solve
from .polytope import Polytope
from .raked import (
    CIRCLE_TOL,
    RakedTrigPoly,
    RootMultiset,
    SelfInvPoly,
    derivative_rows,
    design_rows,
    selfinv_roots,
    trig_to_selfinv,
)
from .roots import RootFindingError

log = logging.getLogger(__name__)

ZERO_TOL = 1e-9
MIN_MARGIN = 1e-9
PSI_TOL_MIN = 1e-3
PSI_TOL_MAX = 0.5


@dataclass(frozen=True)
class FaceCertificate:
    """Witness that a set of curve points spans a face.

    ``functional`` is the affine vector (alpha_0..alpha_2k) for polytope faces
    and a :class:`RakedTrigPoly` for body faces.  ``margin`` is the smallest
    value on the complement (polytope) or the LP margin against the weight
    prod (1 - cos(t - t_i)) (body).
    """

    kind: str
    functional: object
    zero_set: tuple[float, ...]
    margin: float
    verified: bool
    dimension: int = -1
    vertices: tuple[int, ...] = ()
    roots: Optional[RootMultiset] = None


@dataclass(frozen=True)
class NotFound:
    """A body certificate search that produced no verified polynomial.

    ``reason`` is ``"infeasible"`` when no candidate exists on the grid and
    ``"unverified"`` when the LP found a candidate that failed root verification.
    """

    reason: str
    detail: str = ""

    def __bool__(self) -> bool:
        return False


def _affine_rows(P: Polytope, idx) -> np.ndarray:
    idx = list(idx)
    return np.hstack([np.ones((len(idx), 1)), P.coords[idx]])


def _project_out(alpha: np.ndarray, R: np.ndarray) -> np.ndarray:
    """Orthogonal projection of ``alpha`` onto the null space of ``R``."""
    if R.shape[0] == 0:
        return alpha
    return alpha - np.linalg.lstsq(R, R @ alpha, rcond=None)[0]


def _polytope_certificate(P: Polytope, S: Sequence[int], alpha: np.ndarray) -> Optional[FaceCertificate]:
    S = sorted(S)
    comp = [i for i in range(P.n) if i not in set(S)]
    alpha = _project_out(alpha, _affine_rows(P, S))
    vals = _affine_rows(P, comp) @ alpha if comp else np.array([1.0])
    margin = float(vals.min())
    if not margin > 0:
        return None
    alpha = alpha / margin
    zero_res = float(np.abs(_affine_rows(P, S) @ alpha).max()) if S else 0.0
    verified = zero_res < ZERO_TOL
    return FaceCertificate(
        kind="polytope-face",
        functional=alpha,
        zero_set=tuple(float(P.angles[i]) for i in S),
        margin=1.0,
        verified=verified,
        dimension=P.affine_rank(S),
        vertices=tuple(S),
    )


def is_face(P: Polytope, S: Iterable[int]) -> Optional[FaceCertificate]:
    """Certificate that the vertices ``S`` are exactly the vertex set of a face, else None.

    Feasibility of alpha with A(v) = 0 on S and A(w) >= 1 off S.
    """
    S = sorted(set(S))
    if not S or len(S) >= P.n:
        raise ValueError("S must be a nonempty proper subset of the vertices")
    comp = [i for i in range(P.n) if i not in set(S)]
    nv = 2 * P.k + 1
    prog = LinearProgram(
        np.zeros(nv),
        A_ub=-_affine_rows(P, comp),
        b_ub=-np.ones(len(comp)),
        A_eq=_affine_rows(P, S),
        b_eq=np.zeros(len(S)),
    )
    res = lp_solve(prog)
    if not res.ok:
        return None
    cert = _polytope_certificate(P, S, res.x)
    if cert is None or not cert.verified:
        return None
    return cert


def common_face_feasible(P: Polytope, S: Iterable[int]) -> bool:
    """Whether some proper face contains all of ``S``."""
    S = sorted(set(S))
    if not S:
        raise ValueError("S must be nonempty")
    comp = [i for i in range(P.n) if i not in set(S)]
    if not comp:
        return False
    nv = 2 * P.k + 1
    Ac = _affine_rows(P, comp)
    prog = LinearProgram(
        np.zeros(nv),
        A_ub=np.vstack([-Ac, -Ac.sum(axis=0, keepdims=True)]),
        b_ub=np.concatenate([np.zeros(len(comp)), [-1.0]]),
        A_eq=_affine_rows(P, S),
        b_eq=np.zeros(len(S)),
    )
    return lp_solve(prog).ok


def face_closure(P: Polytope, S: Iterable[int]) -> Optional[FaceCertificate]:
    """The smallest face containing ``S``, with its certificate; None if that is P itself.

    Maximizes sum_w min(A(w), 1) over functionals that vanish on S and are
    nonnegative on all vertices.  A vertex w ends up with value 0 exactly when
    every such functional vanishes at w, i.e. when w lies in the smallest face.
    """
    S = sorted(set(S))
    comp = [i for i in range(P.n) if i not in set(S)]
    if not comp:
        return None
    nv, nc = 2 * P.k + 1, len(comp)
    Ac = _affine_rows(P, comp)
    # variables: alpha (nv), u (nc); u_w <= A(w), A(w) >= 0
    A_ub = np.vstack(
        [np.hstack([-Ac, np.eye(nc)]), np.hstack([-Ac, np.zeros((nc, nc))])]
    )
    prog = LinearProgram(
        np.concatenate([np.zeros(nv), np.ones(nc)]),
        A_ub=A_ub,
        b_ub=np.zeros(2 * nc),
        A_eq=np.hstack([_affine_rows(P, S), np.zeros((len(S), nc))]) if S else None,
        b_eq=np.zeros(len(S)) if S else None,
        bounds=[(None, None)] * nv + [(0.0, 1.0)] * nc,
        maximize=True,
    )
    res = lp_solve(prog)
    if not res.ok:
        raise RuntimeError(f"closure LP failed: {res.message}")
    u = res.x[nv:]
    if u.max() < 0.5:
        return None
    closure = sorted(set(S) | {w for w, uw in zip(comp, u) if uw < 0.5})
    cert = _polytope_certificate(P, closure, res.x[:nv])
    if cert is None or not cert.verified:
        # fall back to a fresh feasibility LP on the proposed vertex set
        cert = is_face(P, closure)
        if cert is None:
            raise RuntimeError(f"closure {closure} of {S} failed to re-certify")
    return cert


# ---------------------------------------------------------------------------
# the continuous body B_2k


def default_grid(k: int) -> int:
    return 720 * k


def _zero_weight(grid: np.ndarray, T: np.ndarray) -> np.ndarray:
    if T.size == 0:
        return np.ones_like(grid)
    return np.prod(1.0 - np.cos(grid[:, None] - T[None, :]), axis=1)


def _top_degree(A: RakedTrigPoly, rel: float = 1e-13) -> int:
    scale = max(abs(A.c), np.abs(A.a).max(), np.abs(A.b).max())
    for j in range(A.k, 0, -1):
        if max(abs(A.a[j - 1]), abs(A.b[j - 1])) > rel * scale:
            return j
    return 0


def _deflate(coeffs: np.ndarray, root: complex) -> tuple[np.ndarray, complex]:
    """Synthetic division of an ascending polynomial by (z - root)."""
    desc = coeffs[::-1]
    out = np.empty(desc.size - 1, dtype=complex)
    acc = 0.0 + 0j
    for i, c in enumerate(desc[:-1]):
        acc = acc * root + c
        out[i] = acc
    rem = acc * root + desc[-1]
    return out[::-1], rem


def verify_body_certificate(A: RakedTrigPoly, T: Sequence[float]) -> tuple[bool, str, Optional[RootMultiset]]:
    """Check that the unit-circle roots of A's self-inversive image are exactly
    exp(i T), each with even multiplicity.

    The double roots at T are divided out first and the quotient is
    root-found on its own; this keeps clustered double roots from smearing.
    Returns (ok, reason, multiset).
    """
    T = [normalize(t) for t in T]
    kk = _top_degree(A)
    if kk == 0:
        return (not T and A.c > 0), "constant polynomial", None
    Ar = RakedTrigPoly(kk, A.c, A.a[:kk], A.b[:kk])
    D = trig_to_selfinv(Ar)
    q = D.coeffs.copy()
    scale = np.abs(q).sum()
    dq = np.arange(q.size) * q
    if 2 * len(T) > D.degree:
        return False, "too many prescribed roots", None
    # double-root conditions are read off the undeflated polynomial; remainders
    # of successive deflations lose accuracy when points of T nearly coincide
    for t in T:
        zeta = complex(math.cos(t), math.sin(t))
        val = abs(np.polyval(q[::-1], zeta))
        der = abs(np.polyval(dq[::-1], zeta))
        if max(val, der / q.size) > 1e-9 * scale:
            return False, f"no double root at t={t:.6g} (residual {max(val, der / q.size):.2e})", None
    for t in T:
        zeta = complex(math.cos(t), math.sin(t))
        for _ in range(2):
            q, _ = _deflate(q, zeta)
    roots = [complex(math.cos(t), math.sin(t)) for t in T for _ in range(2)]
    if q.size > 1:
        try:
            roots.extend(selfinv_roots(SelfInvPoly(q)).expanded())
        except RootFindingError as exc:
            return False, f"root finder: {exc}", None
    M = RootMultiset.from_list(roots)
    ang, mult = M.circle_angles(CIRCLE_TOL)
    if np.any(mult % 2):
        return False, "odd multiplicity on the unit circle", M
    if len(ang) != len(T) or any(min(arc_distance(a, t) for t in T) > 1e-6 for a in ang):
        extra = [float(a) for a in ang if min((arc_distance(a, t) for t in T), default=9) > 1e-6]
        return False, f"extra unit-circle roots at {extra}", M
    if A.c <= 0:
        return False, "negative mean value", M
    return True, "", M


def body_face_certificate(
    k: int,
    T: Sequence[float],
    grid_size: Optional[int] = None,
) -> FaceCertificate | NotFound:
    """Search for a nonnegative raked polynomial with double zeros exactly at ``T``.

    The LP fixes c = 1, forces A(t_i) = A'(t_i) = 0 exactly by working in the
    null space of those conditions, and maximizes the margin s in
    A(g) >= s * prod_i (1 - cos(g - t_i)) over a uniform grid.
    """
    T_arr = np.array([normalize(t) for t in T], dtype=float)
    if T_arr.size > 2 * k - 1:
        raise ValueError(f"at most 2k-1 = {2 * k - 1} points can be prescribed")
    for i in range(T_arr.size):
        for j in range(i + 1, T_arr.size):
            if arc_distance(T_arr[i], T_arr[j]) < 1e-10:
                raise ValueError("points of T must be distinct")
    N = grid_size or default_grid(k)
    E = np.vstack([design_rows(k, T_arr), derivative_rows(k, T_arr)]) if T_arr.size else np.zeros((0, 2 * k + 1))
    Z = null_space(E, rcond=1e-10) if E.shape[0] else np.eye(2 * k + 1)
    if Z.shape[1] == 0:
        return NotFound("infeasible", "no raked polynomial has double zeros at all of T")
    grid = 2 * math.pi * np.arange(N) / N
    w = _zero_weight(grid, T_arr)
    G = design_rows(k, grid) @ Z
    r = Z.shape[1]
    # c = 1 and nonnegativity bound every coefficient by 2, hence |y| <= |x| <= sqrt(1 + 8k)
    ybound = math.sqrt(1 + 8 * k) + 1.0
    prog = LinearProgram(
        np.concatenate([np.zeros(r), [1.0]]),
        A_ub=np.hstack([-G, w[:, None]]),
        b_ub=np.zeros(N),
        A_eq=np.concatenate([Z[0], [0.0]])[None, :],
        b_eq=np.array([1.0]),
        bounds=[(-ybound, ybound)] * r + [(None, 10.0)],
        maximize=True,
    )
    res = lp_solve(prog)
    if not res.ok:
        return NotFound("infeasible", f"grid LP {res.status}")
    s = float(res.x[-1])
    if s <= MIN_MARGIN:
        return NotFound("infeasible", f"grid margin {s:.3e} is not positive")
    A = RakedTrigPoly.from_vector(k, Z @ res.x[:r])
    ok, why, M = verify_body_certificate(A, T_arr)
    if not ok:
        log.debug("body certificate for %s rejected: %s", T_arr, why)
        return NotFound("unverified", why)
    return FaceCertificate(
        kind="body-face",
        functional=A,
        zero_set=tuple(float(t) for t in T_arr),
        margin=s,
        verified=True,
        dimension=_body_dimension(k, T_arr),
        roots=M,
    )


def _body_dimension(k: int, T: np.ndarray) -> int:
    from .curve import sm_coords

    pts = sm_coords(k, T)
    if len(T) <= 1:
        return 0
    return int(np.linalg.matrix_rank(pts[1:] - pts[0], tol=1e-9))


def is_body_edge(k: int, theta: float, grid_size: Optional[int] = None, center: float = 0.0):
    """Certificate search for the pair center +- theta/2."""
    return body_face_certificate(k, [center - theta / 2, center + theta / 2], grid_size)


@dataclass
class PsiEstimate:
    """Bracket [lo, hi] for the edge threshold: arc lo certified, arc hi not."""

    k: int
    lo: float
    hi: float
    tol: float
    trace: list = field(default_factory=list)
    warnings: list = field(default_factory=list)

    @property
    def width(self) -> float:
        return self.hi - self.lo


def psi_estimate(
    k: int,
    tol: float,
    grid_size: Optional[int] = None,
    lo: float = 0.05,
    hi: float = math.pi,
) -> PsiEstimate:
    """Bisection on the arc length of a symmetric pair {-theta/2, theta/2}.

    Arcs shorter than a certified edge are edges as well, so the certified
    arcs form an initial segment and bisection brackets its end.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    if not PSI_TOL_MIN <= tol <= PSI_TOL_MAX:
        raise ValueError(f"tol must lie in [{PSI_TOL_MIN}, {PSI_TOL_MAX}], got {tol}")
    est = PsiEstimate(k, lo, hi, tol)

    def probe(theta):
        cert = is_body_edge(k, theta, grid_size)
        est.trace.append((theta, bool(cert)))
        if isinstance(cert, NotFound) and cert.reason == "unverified":
            est.warnings.append(f"arc {theta:.6f}: LP candidate rejected ({cert.detail})")
        return bool(cert)

    if not probe(lo):
        est.warnings.append(f"no certified edge at the starting arc {lo}; bracket widened to 0")
        est.lo = 0.0
    if probe(hi):
        est.warnings.append(f"arc {hi} unexpectedly certified")
        est.lo = est.hi = hi
        return est
    while est.hi - est.lo > tol:
        mid = 0.5 * (est.lo + est.hi)
        if probe(mid):
            est.lo = mid
        else:
            est.hi = mid
    return est

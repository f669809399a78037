"""Named numerical checks of the structural facts about B_2k.

Each suite returns a list of claim rows ``{claim, value, bound, margin, pass}``
where ``bound`` is computed from its formula at run time.
"""

from __future__ import annotations

import math

import numpy as np

from .census import _claim, antipodal_edges, edges, enumerate_faces
from .circle import arc_distance, arc_span, equally_spaced
from .curve import derivative_matrix, frequencies, nonflatness_check, sm_coords
from .faces import body_face_certificate, verify_body_certificate
from .hull import load_fixture
from .polytope import build
from .raked import (
    RakedTrigPoly,
    deform,
    newton_power_sums,
    poly_from_multiset,
    power_sum_check,
    power_sums,
    root_localization_check,
    selfinv_roots,
    trig_to_selfinv,
)

NONFLAT_MIN = 1e-6
B6_ARC = math.acos(1.0 / 8.0)


# ---------------------------------------------------------------------------
# random instances


def random_raked(k: int, rng: np.random.Generator) -> RakedTrigPoly:
    """Gaussian coefficients; the self-inversive image is complex in general."""
    return RakedTrigPoly(k, rng.normal(), rng.normal(size=k), rng.normal(size=k))


def random_real_raked(k: int, rng: np.random.Generator, touch: str = "none") -> RakedTrigPoly:
    """An even raked polynomial, whose self-inversive image has real coefficients.

    ``touch`` shapes the roots at +-1: "none" leaves them generic (absent),
    "one" makes t = 0 a minimum with value 0 (a double root at z = 1), and
    "min" lifts the polynomial to be nonnegative with a double zero at its
    global minimum.
    """
    b = rng.normal(size=k)
    b[-1] += math.copysign(0.5, b[-1])
    A = RakedTrigPoly(k, rng.normal(), np.zeros(k), b)
    if touch == "one":
        A = RakedTrigPoly(k, A.c - A(0.0), A.a, A.b)
    elif touch == "min":
        grid = np.linspace(0, 2 * math.pi, 20001)
        A = RakedTrigPoly(k, A.c - A(grid).min(), A.a, A.b)
    return A


# ---------------------------------------------------------------------------
# suites


def suite_smilansky(n: int = 12, fixtures=None) -> list[dict]:
    """Edges and triangles of B_4(X_n) against the classification of the faces of B_4."""
    P = build(2, equally_spaced(n))
    census = enumerate_faces(P, 3)
    got = set(edges(census))
    third = 2 * math.pi / 3
    angles = P.angles
    triangles = set()
    if n % 3 == 0:
        for i in range(n // 3):
            triangles.add(frozenset({i, i + n // 3, i + 2 * n // 3}))
    predicted = set()
    for i in range(n):
        for j in range(i + 1, n):
            d = arc_distance(angles[i], angles[j])
            if d < third - 1e-9 or any({i, j} <= T for T in triangles):
                predicted.add((i, j))
    rows = [
        _claim("edge set equals {arc < 2pi/3} plus triangle sides", len(got ^ predicted), 0),
        _claim("inscribed triangles are 2-faces", sum(1 for T in triangles if census.faces.get(T) is None or census.faces[T].dimension != 2), 0),
        _claim("no antipodal edge", len(antipodal_edges(P, census)), 0),
    ]
    if n % 12 == 0:
        for mult in (1, 2, 3, 5, 6):
            s = mult * n // 12
            pairs = {tuple(sorted((i, (i + s) % n))) for i in range(n)}
            want_edge = mult * math.pi / 6 < third
            wrong = sum(1 for p in pairs if (p in got) != want_edge)
            rows.append(_claim(f"all pairs at arc {mult}pi/6 are {'edges' if want_edge else 'non-faces'}", wrong, 0))
    fx = load_fixture(2, n, "sm", fixtures)
    if fx is not None:
        ref = {F for F in fx["faces"] if len(F) <= 3 and P.affine_rank(F) <= 2}
        mine = {F for F in census.faces if census.faces[F].dimension <= 2}
        rows.append(_claim("faces of dim <= 2 match the hull fixture", len(ref ^ mine), 0))
    return rows


def suite_deformation(k: int = 3, trials: int = 200, seed: int = 0, ks=None) -> list[dict]:
    """Deformed root multisets of raked real polynomials stay raked and real."""
    rng = np.random.default_rng(seed)
    ks = ks or [k]
    worst_raked = worst_imag = worst_sum = 0.0
    failures = 0
    for trial in range(trials):
        kk = ks[trial % len(ks)]
        A = random_real_raked(kk, rng, ["none", "one", "min"][trial % 3])
        M = selfinv_roots(trig_to_selfinv(A))
        for lam in (0.5, 1.01, 2.0):
            try:
                Ml = deform(M, lam)
                raw = np.poly(Ml.expanded())
                D = poly_from_multiset(Ml)
            except ValueError:
                failures += 1
                continue
            scale = np.abs(raw).max()
            worst_imag = max(worst_imag, float(np.abs(raw.imag).max() / scale))
            worst_raked = max(worst_raked, D.raked_residual())
            worst_sum = max(worst_sum, float(np.abs(power_sum_check(Ml, kk)).max(initial=0.0)))
    return [
        _claim("deformation failures", failures, 0),
        _claim("odd coefficients of D_lambda (relative)", worst_raked, 1e-8),
        _claim("imaginary residue of D_lambda (relative)", worst_imag, 1e-8),
        _claim("odd power sums of M_lambda", worst_sum, 1e-8),
    ]


def suite_newton(k: int = 3, trials: int = 200, seed: int = 0, ks=None) -> list[dict]:
    """Odd power sums of raked root multisets vanish; root and coefficient sides agree."""
    rng = np.random.default_rng(seed)
    ks = ks or [k]
    worst_odd = worst_agree = 0.0
    for trial in range(trials):
        kk = ks[trial % len(ks)]
        D = trig_to_selfinv(random_raked(kk, rng))
        M = selfinv_roots(D)
        worst_odd = max(worst_odd, float(np.abs(power_sum_check(M, kk)).max(initial=0.0)))
        m = D.degree
        from_roots = power_sums(M, range(1, m + 1))
        from_coeffs = newton_power_sums(D.coeffs, m)
        scale = np.maximum(1.0, np.abs(from_roots))
        worst_agree = max(worst_agree, float((np.abs(from_roots - from_coeffs) / scale).max()))
    return [
        _claim("|s_(2j-1)| over root multisets", worst_odd, 1e-9),
        _claim("Newton identities: root vs coefficient power sums (relative)", worst_agree, 1e-8),
    ]


def delta0_angles(k: int) -> np.ndarray:
    return np.array([2 * math.pi * j / (2 * k - 1) for j in range(1, 2 * k)]) % (2 * math.pi)


def suite_simplex(ks=(2, 3, 4)) -> list[dict]:
    """Delta_0 is a face cut out by 1 - cos((2k-1)t), and a regular simplex."""
    rows = []
    for k in ks:
        tau = delta0_angles(k)
        ok, why, _ = verify_body_certificate(RakedTrigPoly.one_minus_cos(k), tau)
        rows.append(_claim(f"k={k}: 1-cos({2 * k - 1}t) certifies Delta_0", int(not ok), 0))
        found = body_face_certificate(k, tau)
        rows.append(_claim(f"k={k}: LP search certifies Delta_0", int(not found), 0))
        pts = sm_coords(k, tau)
        dist = [np.linalg.norm(pts[i] - pts[j]) for i in range(len(tau)) for j in range(i + 1, len(tau))]
        rows.append(_claim(f"k={k}: Delta_0 edge-length spread", float(max(dist) - min(dist)), 1e-10))
        dim = int(np.linalg.matrix_rank(pts[1:] - pts[0], tol=1e-9))
        rows.append(_claim(f"k={k}: Delta_0 dimension is 2k-2", abs(dim - (2 * k - 2)), 0))
    return rows


def vandermonde_det(k: int) -> float:
    """|det| of the derivative frame at t = 0 as a product of two Vandermonde determinants."""
    m = frequencies(k).astype(float)
    sq = m**2
    v_even = np.prod([sq[j] - sq[i] for i in range(k) for j in range(i + 1, k)])
    v_odd = np.prod(m) * v_even
    return float(abs(v_even * v_odd))


def suite_nonflat(kmax: int = 6, trials: int = 100, seed: int = 0) -> list[dict]:
    rng = np.random.default_rng(seed)
    rows = []
    for k in range(1, kmax + 1):
        ts = rng.uniform(0, 2 * math.pi, trials)
        normed = np.array([nonflatness_check(k, t) for t in ts])
        raw = np.array([abs(np.linalg.det(derivative_matrix(k, t))) for t in ts])
        exact = vandermonde_det(k)
        rows.append(_claim(f"k={k}: row-normalized |det| > {NONFLAT_MIN:g}", float(normed.min()), NONFLAT_MIN, ">="))
        rows.append(_claim(f"k={k}: |det| matches the Vandermonde product (relative)", float(np.abs(raw / exact - 1).max()), 1e-8))
        rows.append(_claim(f"k={k}: normalized |det| is t-independent (relative)", float(np.ptp(normed) / normed.max()), 1e-8))
    return rows


def random_short_arc_points(count: int, arc: float, rng: np.random.Generator, min_sep: float = 0.0) -> np.ndarray:
    """``count`` distinct points drawn uniformly inside a random arc of length ``arc``."""
    while True:
        start = rng.uniform(0, 2 * math.pi)
        pts = np.sort(rng.uniform(0, arc, count))
        if np.all(np.diff(pts) > max(min_sep, 1e-9)):
            return np.mod(start + pts, 2 * math.pi)


def suite_b6(arc: float = 1.4, trials: int = 100, seed: int = 0) -> list[dict]:
    """Triples within short arcs are 2-faces of B_6."""
    rng = np.random.default_rng(seed)
    failures = []
    for _ in range(trials):
        T = random_short_arc_points(3, arc, rng)
        if not body_face_certificate(3, T):
            failures.append([float(t) for t in T])
    rows = [_claim(f"triples in arcs of length {arc:g}: certificate failures", len(failures), 0)]
    rows[0]["arccos(1/8)"] = B6_ARC
    rows[0]["within_proven_range"] = arc <= B6_ARC
    return rows


def suite_localization(k: int = 2, trials: int = 200, arc: float = 0.3, seed: int = 0, min_sep: float = 0.01) -> list[dict]:
    """Raked polynomials with 2k roots in a short arc have no other roots except antipodally."""
    rng = np.random.default_rng(seed)
    from .raked import design_rows
    from scipy.linalg import null_space

    bad = skipped = 0
    for _ in range(trials):
        T = random_short_arc_points(2 * k, arc, rng, min_sep=min_sep)
        x = null_space(design_rows(k, T))[:, 0]
        A = RakedTrigPoly.from_vector(k, x)
        start = float(T[0])
        res = root_localization_check(A, start, arc_span(T) + 1e-9)
        if res is None:
            skipped += 1
        elif not res:
            bad += 1
    return [_claim("roots outside Omega u (Omega+pi)", bad, 0), _claim("inapplicable instances", skipped, 0)]


SUITES = {
    "smilansky": suite_smilansky,
    "deformation": suite_deformation,
    "newton": suite_newton,
    "simplex": suite_simplex,
    "nonflat": suite_nonflat,
    "b6": suite_b6,
    "localization": suite_localization,
}

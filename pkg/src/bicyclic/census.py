"""Face censuses of B_2k(X): enumeration by vertex subsets, f-vectors, densities."""

from __future__ import annotations

import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Optional

import numpy as np

from .bounds import ub1_bound, ub2_bound
from .circle import arc_span
from .faces import FaceCertificate, face_closure
from .polytope import Polytope, Symmetry

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 200_000


@dataclass
class FaceCensus:
    """Faces of B_2k(X) found from vertex subsets of size <= ``cap``.

    Every face of dimension <= cap-1 is the smallest face containing some
    cap-or-fewer of its vertices, so ``f_vector[j + 1]`` is exact for those j
    (``complete_dims``).  Larger faces met along the way are listed but their
    counts are only lower bounds.
    """

    k: int
    n: int
    cap: int
    faces: dict[frozenset, FaceCertificate]
    partial: bool = False
    lp_count: int = 0
    subsets_checked: int = 0
    notes: list = field(default_factory=list)

    @property
    def dim(self) -> int:
        return 2 * self.k

    @property
    def complete_dims(self) -> list[int]:
        if self.partial:
            return []
        return list(range(0, min(self.cap, self.dim)))

    def by_dim(self, j: int) -> list[frozenset]:
        return sorted((F for F, c in self.faces.items() if c.dimension == j), key=sorted)

    @property
    def f_vector(self) -> list[int]:
        """(f_-1, f_0, ..., f_{2k-1}); entries past ``complete_dims`` are lower bounds."""
        f = [1] + [0] * self.dim
        for cert in self.faces.values():
            if 0 <= cert.dimension < self.dim:
                f[cert.dimension + 1] += 1
        return f

    def f(self, j: int) -> int:
        return self.f_vector[j + 1]

    def is_complete(self, j: int) -> bool:
        return j in self.complete_dims


def _closure_job(args):
    P, S = args
    cert = face_closure(P, S)
    return S, cert


def _transform_certificate(P: Polytope, cert: FaceCertificate, g: Symmetry) -> FaceCertificate:
    """Image of a polytope-face certificate under a symmetry of X."""
    Q = g.linear(P.k)
    alpha = np.asarray(cert.functional)
    new_alpha = np.concatenate([[alpha[0]], Q @ alpha[1:]])
    verts = g.apply(cert.vertices)
    return FaceCertificate(
        kind=cert.kind,
        functional=new_alpha,
        zero_set=tuple(float(P.angles[i]) for i in verts),
        margin=cert.margin,
        verified=cert.verified,
        dimension=cert.dimension,
        vertices=verts,
    )


def _recheck(P: Polytope, cert: FaceCertificate) -> bool:
    alpha = np.asarray(cert.functional)
    vals = alpha[0] + P.coords @ alpha[1:]
    on = np.zeros(P.n, dtype=bool)
    on[list(cert.vertices)] = True
    return bool(np.abs(vals[on]).max() < 1e-8 and (vals[~on].min(initial=np.inf) > 0.5))


def enumerate_faces(
    P: Polytope,
    max_vertex_cap: int,
    budget: int = DEFAULT_BUDGET,
    use_symmetry: bool = True,
    workers: int = 1,
) -> FaceCensus:
    """Breadth-first over vertex subsets of size 1..cap.

    Each subset gets one closure LP (its smallest containing face).  A subset is
    only tried when all its one-smaller subsets lie in a proper face, which is
    necessary for it to lie in one.  With ``use_symmetry`` only one subset per
    orbit of the rotations/reflections preserving X is solved; the other
    certificates are transported and re-validated.
    """
    if max_vertex_cap < 2:
        raise ValueError("cap must be at least 2")
    cap = min(max_vertex_cap, P.n - 1)
    group = P.symmetries() if use_symmetry else []
    census = FaceCensus(P.k, P.n, max_vertex_cap, {})

    def canon(S):
        if not group:
            return S, None
        best, best_g = S, None
        for g in group:
            img = g.apply(S)
            if img < best:
                best, best_g = img, g
        return best, best_g

    # closure[S] for every subset tried: frozenset or None (only P contains S)
    closure: dict[tuple, Optional[frozenset]] = {}
    level = [(i,) for i in range(P.n)]
    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for size in range(1, cap + 1):
            if size > 1:
                prev = {S for S in closure if len(S) == size - 1 and closure[S] is not None}
                level = []
                for S in sorted(prev):
                    for v in range(S[-1] + 1, P.n):
                        T = S + (v,)
                        if all(T[:i] + T[i + 1 :] in prev for i in range(size)):
                            level.append(T)
            if census.subsets_checked + len(level) > budget:
                census.partial = True
                census.notes.append(
                    f"budget {budget} exceeded at subset size {size} ({len(level)} candidates)"
                )
                break
            reps: dict[tuple, list] = {}
            for S in level:
                rep, g = canon(S)
                reps.setdefault(rep, []).append((S, g))
            jobs = [(P, rep) for rep in sorted(reps)]
            if pool is not None:
                results = list(pool.map(_closure_job, jobs, chunksize=8))
            else:
                results = [_closure_job(j) for j in jobs]
            census.lp_count += len(jobs)
            census.subsets_checked += len(level)
            for rep, cert in results:
                for S, g in reps[rep]:
                    if cert is None:
                        closure[S] = None
                        continue
                    if g is None:
                        c = cert
                    else:
                        # g maps S onto rep, so its inverse carries rep's face to S's
                        inv = _inverse(g, group)
                        c = _transform_certificate(P, cert, inv)
                        if not _recheck(P, c):
                            c = face_closure(P, S)
                            census.lp_count += 1
                    F = frozenset(c.vertices)
                    closure[S] = F
                    census.faces.setdefault(F, c)
            log.debug("size %d: %d subsets, %d orbits", size, len(level), len(jobs))
    finally:
        if pool is not None:
            pool.shutdown()
    census.faces = dict(sorted(census.faces.items(), key=lambda kv: (len(kv[0]), sorted(kv[0]))))
    return census


def _inverse(g: Symmetry, group: list[Symmetry]) -> Symmetry:
    inv_perm = [0] * len(g.perm)
    for i, p in enumerate(g.perm):
        inv_perm[p] = i
    inv_perm = tuple(inv_perm)
    for h in group:
        if h.perm == inv_perm:
            return h
    raise RuntimeError("symmetry group is not closed under inverses")


def edge_density(census: FaceCensus) -> float:
    """f_1 / C(n, 2)."""
    if not census.is_complete(1):
        raise ValueError("edges are not completely enumerated")
    return census.f(1) / comb(census.n, 2)


def edges(census: FaceCensus) -> list[tuple[int, int]]:
    return [tuple(sorted(F)) for F in census.by_dim(1)]


def antipodal_edges(P: Polytope, census: FaceCensus) -> list[tuple[int, int]]:
    anti = P.antipode_index()
    if anti is None:
        return []
    return [(i, j) for i, j in edges(census) if anti[i] == j]


def bound_checks(census: FaceCensus) -> list[dict]:
    """Compare the complete entries of the census with the cs upper bounds."""
    d, n = census.dim, census.n
    rows = []
    if census.is_complete(1):
        b = ub1_bound(d, n)
        rows.append(_claim("UB1 f_1 <= n^2/2 (1-2^-d)", census.f(1), b))
    for j in range(1, (d - 2) // 2 + 1):
        if census.is_complete(j):
            b = ub2_bound(d, n, j)
            rows.append(_claim(f"UB2 f_{j} <= n/(n-1) (1-2^-d) C(n,{j + 1})", census.f(j), b))
    return rows


def _claim(name: str, value, bound, kind: str = "<=") -> dict:
    ok = value <= bound if kind == "<=" else value >= bound
    margin = (bound - value) if kind == "<=" else (value - bound)
    return {"claim": name, "value": value, "bound": bound, "margin": margin, "pass": bool(ok)}


def triples_on_short_arcs(P: Polytope, max_arc: float) -> list[tuple[int, int, int]]:
    """Vertex triples whose angles fit in a closed arc of length ``max_arc``."""
    return [
        S
        for S in itertools.combinations(range(P.n), 3)
        if arc_span(P.angles[list(S)]) <= max_arc + 1e-12
    ]


def sandwich_report(
    k: int,
    n_list,
    j: int,
    budget: int = DEFAULT_BUDGET,
    use_symmetry: bool = True,
) -> list[dict]:
    """f_j of B_2k(equally spaced n) next to the cs and Upper Bound Theorem bounds.

    Ratios use C(n, j+1) for j <= k-1 and C(n, k) for k <= j < 2k, the orders
    of growth in the two ranges.
    """
    from .bounds import ubt_fbound
    from .circle import equally_spaced
    from .polytope import build

    d = 2 * k
    if not 0 <= j < d:
        raise ValueError(f"j must lie in [0, {d - 1}], got {j}")
    rows = []
    for n in n_list:
        P = build(k, equally_spaced(n), check_vertices=False)
        census = enumerate_faces(P, j + 1, budget=budget, use_symmetry=use_symmetry)
        fj = census.f(j)
        upper = ubt_fbound(d, n, j)
        cs_bound = None
        if j == 1:
            cs_bound = ub1_bound(d, n)
        elif 1 < j <= k - 1:
            cs_bound = ub2_bound(d, n, j)
        denom = comb(n, j + 1) if j <= k - 1 else comb(n, k)
        best_upper = upper if cs_bound is None else min(upper, cs_bound)
        rows.append(
            {
                "n": n,
                "k": k,
                "j": j,
                "f_j": fj,
                "exact": census.is_complete(j),
                "ubt_bound": upper,
                "cs_bound": cs_bound,
                "denominator": denom,
                "ratio": fj / denom,
                "upper_ratio": best_upper / denom,
                "consistent": fj <= best_upper,
            }
        )
    return rows

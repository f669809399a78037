import math
from math import comb

import pytest

from bicyclic.census import (
    antipodal_edges,
    bound_checks,
    edge_density,
    edges,
    enumerate_faces,
    sandwich_report,
    triples_on_short_arcs,
)
from bicyclic.circle import SymmetricPointSet, equally_spaced
from bicyclic.hull import face_lattice, load_fixture
from bicyclic.polytope import build


def _complete_faces(census):
    dims = census.complete_dims
    return {F for F, c in census.faces.items() if c.dimension in dims}


def _fixture_faces(P, fx, dims):
    return {F for F in fx["faces"] if P.affine_rank(F) in dims}


@pytest.mark.parametrize(
    "k,n,cap",
    [(2, 6, 4), (2, 8, 4), (2, 12, 4), (2, 18, 3), (2, 24, 3), (3, 12, 4), (3, 24, 3)],
)
def test_census_matches_hull_fixture(k, n, cap):
    fx = load_fixture(k, n)
    assert fx is not None
    P = build(k, equally_spaced(n))
    census = enumerate_faces(P, cap)
    assert not census.partial
    assert _complete_faces(census) == _fixture_faces(P, fx, census.complete_dims)


@pytest.mark.parametrize("name,k,n", [("smrand", 2, 10), ("smrand", 2, 16), ("smrand", 3, 14)])
def test_census_on_random_symmetric_sets(name, k, n):
    fx = load_fixture(k, n, name)
    P = build(k, SymmetricPointSet(tuple(fx["angles"])))
    census = enumerate_faces(P, 2 * k)
    assert _complete_faces(census) == _fixture_faces(P, fx, census.complete_dims)


def test_symmetry_reduction_changes_nothing():
    P = build(3, equally_spaced(12))
    a = enumerate_faces(P, 3, use_symmetry=True)
    b = enumerate_faces(P, 3, use_symmetry=False)
    assert set(a.faces) == set(b.faces)
    assert a.lp_count < b.lp_count


def test_parallel_workers_agree():
    P = build(2, equally_spaced(12))
    a = enumerate_faces(P, 3, workers=1, use_symmetry=False)
    b = enumerate_faces(P, 3, workers=2, use_symmetry=False)
    assert set(a.faces) == set(b.faces)


def test_qhull_oracle_runs_on_the_fly():
    P = build(2, equally_spaced(10))
    lattice = face_lattice(P.coords)
    census = enumerate_faces(P, 4)
    assert set(lattice) == {F for F in census.faces if len(F) < P.n}


def test_budget_overrun_is_partial():
    P = build(3, equally_spaced(24))
    census = enumerate_faces(P, 4, budget=5)
    assert census.partial
    assert census.complete_dims == []


def test_edge_statistics_b4():
    P = build(2, equally_spaced(12))
    census = enumerate_faces(P, 3)
    assert len(edges(census)) == census.f(1)
    assert edge_density(census) == census.f(1) / comb(12, 2)
    assert antipodal_edges(P, census) == []
    rows = bound_checks(census)
    assert rows and all(r["pass"] for r in rows)
    assert all(r["margin"] == pytest.approx(r["bound"] - r["value"]) for r in rows)


def test_short_arc_triples():
    P = build(3, equally_spaced(12))
    triples = triples_on_short_arcs(P, math.acos(1 / 8))
    # arcs of length <= 1.4455 contain at most 3 consecutive points (2 steps of pi/6)
    assert len(triples) == 12
    census = enumerate_faces(P, 3)
    assert all(frozenset(T) in census.faces for T in triples)


def test_sandwich_rows():
    rows = sandwich_report(2, [12, 24], 1)
    assert [r["f_j"] for r in rows] == [48, 192]
    for r in rows:
        assert r["exact"] and r["consistent"]
        assert r["ratio"] == r["f_j"] / comb(r["n"], 2)
    with pytest.raises(ValueError):
        sandwich_report(2, [12], 4)

import csv
import json

import pytest

from bicyclic.circle import equally_spaced
from bicyclic.cli import CSV_COLUMNS, EXIT_CLAIM, EXIT_OK, EXIT_USAGE, SCHEMA, main
from bicyclic.hull import f_vector, face_lattice
from bicyclic.polytope import build


def test_census_report_and_csv(tmp_path):
    out, table = tmp_path / "r.json", tmp_path / "f.csv"
    code = main(["census", "--k", "2", "--n", "12", "--cap", "3", "--json", str(out), "--csv", str(table)])
    assert code == EXIT_OK
    report = json.loads(out.read_text())
    assert report["schema"] == SCHEMA
    assert report["config"]["k"] == 2 and report["config"]["n"] == 12
    assert report["results"]["f_vector"][:4] == [1, 12, 48, 64]
    assert all({"bound", "margin"} <= set(c) for c in report["claims"])
    assert "timing" not in report
    with open(table) as fh:
        rows = list(csv.DictReader(fh))
    assert list(rows[0]) == CSV_COLUMNS
    assert [r["status"] for r in rows] == ["pass", "pass", "pass", "incomplete"]


def test_census_rerun_is_bit_identical(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        main(["census", "--k", "2", "--n", "12", "--cap", "3", "--seed", "4", "--json", str(path)])
    assert a.read_bytes() == b.read_bytes()


def test_timing_is_opt_in(tmp_path):
    out = tmp_path / "r.json"
    main(["census", "--k", "2", "--n", "8", "--cap", "2", "--json", str(out), "--timing"])
    assert json.loads(out.read_text())["timing"]["seconds"] >= 0


def test_census_b6_triples(tmp_path):
    out = tmp_path / "r.json"
    assert main(["census", "--k", "3", "--n", "12", "--cap", "3", "--json", str(out)]) == EXIT_OK
    res = json.loads(out.read_text())["results"]
    assert res["short_arc_triple_faces"] == res["short_arc_triples"] == 12


def test_census_budget_overrun_exits_nonzero():
    assert main(["census", "--k", "3", "--n", "24", "--cap", "4", "--budget", "3"]) == EXIT_CLAIM


def test_census_custom_angles():
    assert main(["census", "--k", "2", "--angles", "0.1,0.9,1.7,2.2", "--cap", "3"]) == EXIT_OK


@pytest.mark.parametrize(
    "argv",
    [
        ["psi", "--k", "2", "--tol", "2.0"],
        ["psi", "--tol", "0.1"],
        ["census", "--k", "2"],
        ["census", "--k", "2", "--n", "7"],
        ["bogus"],
        ["verify", "--suite", "nope"],
        ["psi", "--k", "2", "--tol", "-1"],
    ],
)
def test_usage_errors(argv):
    assert main(argv) == EXIT_USAGE


def test_psi_plot_data(tmp_path):
    plot = tmp_path / "psi.txt"
    assert main(["psi", "--k", "2", "--tol", "0.05", "--plot-data", str(plot)]) == EXIT_OK
    lines = plot.read_text().split("\n")
    theta, flag = lines[0].split()
    assert float(theta) == 0.05 and flag == "1"


def test_verify_suite_exit_codes():
    assert main(["verify", "--suite", "smilansky", "--n", "12"]) == EXIT_OK
    assert main(["verify", "--suite", "b6", "--arc", "1.4", "--trials", "10"]) == EXIT_OK
    # long arcs contain non-faces, so the certificate claim fails
    assert main(["verify", "--suite", "b6", "--arc", "3.0", "--trials", "10"]) == EXIT_CLAIM


def test_bounds_csv(tmp_path):
    table = tmp_path / "b.csv"
    assert main(["bounds", "--k", "2", "--n", "12,16", "--j", "3", "--csv", str(table)]) == EXIT_OK
    rows = list(csv.DictReader(open(table)))
    expected = []
    for n in (12, 16):
        P = build(2, equally_spaced(n), check_vertices=False)
        expected.append(f_vector(P.coords, face_lattice(P.coords))[4])
    assert [int(r["f_j"]) for r in rows] == expected


def test_deform_demo(tmp_path):
    out = tmp_path / "d.json"
    assert main(["deform-demo", "--k", "3", "--eps", "0.02", "--json", str(out)]) == EXIT_OK
    res = json.loads(out.read_text())["results"]
    assert len(res["alphas"]) == 4
    assert res["edge_arc"] < res["limit_arc"]

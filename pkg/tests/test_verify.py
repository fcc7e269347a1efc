"""Theorem checker, catalog sweep, report serialization, lemma suites."""

import json

import pytest

from blockheight.catalog import alt, cyclic, extraspecial, sym
from blockheight.verify import (
    CSV_COLUMNS,
    SUITES,
    check_hypothesis,
    check_theorem_A,
    render_figure,
    reports_to_csv,
    reports_to_json,
    run_em_sweep,
    run_lemma_suites,
    write_reports,
)


# ---------------------------------------------------------------------------
# hypothesis and single-pair reports


def test_check_hypothesis():
    assert check_hypothesis(sym(4), 2) == (True, 1)
    assert check_hypothesis(cyclic(12), 2) == (False, None)
    assert check_hypothesis(extraspecial(3, 3, "+"), 3) == (True, 1)
    assert check_hypothesis(alt(4), 2) == (False, None)  # Sylow is abelian V4


def test_theorem_s4_p2():
    r = check_theorem_A(sym(4), 2, name="S4")
    assert r.hypothesis_holds and r.a == 1
    assert r.cd_P == (1, 2)
    assert r.mh_B0 == 1 and r.mh_P == 1
    assert r.witness_degree == 2
    assert r.theorem_holds and r.em_equality_observed
    assert r.solvable and r.b0_equals_quotient_irr
    assert r.bhz_holds is None  # nonabelian Sylow: BHZ not applicable


def test_theorem_vacuous_case():
    r = check_theorem_A(cyclic(6), 2)
    assert not r.hypothesis_holds
    assert r.a is None and r.witness_degree is None
    assert r.theorem_holds  # vacuously
    assert r.bhz_holds is True  # abelian Sylow, all heights zero


def test_to_dict_timings():
    r = check_theorem_A(sym(3), 2)
    d = r.to_dict()
    assert "elapsed_ms" not in d
    d = r.to_dict(timings=True)
    assert isinstance(d["elapsed_ms"], int)
    assert d["cd_P"] == [1]


# ---------------------------------------------------------------------------
# the sweep


@pytest.fixture(scope="module")
def sweep120():
    return run_em_sweep(max_order=120)


def test_sweep_contents(sweep120):
    reports = sweep120
    assert len(reports) == 76
    hyp = [r for r in reports if r.hypothesis_holds]
    assert len(hyp) == 20
    assert all(r.theorem_holds for r in reports)
    keys = [(r.order, r.group, r.p) for r in reports]
    assert keys == sorted(keys)


def test_sweep_prime_filter(sweep120):
    only2 = run_em_sweep(prime=2, max_order=120)
    expect = [r.to_dict() for r in sweep120 if r.p == 2]
    assert [r.to_dict() for r in only2] == expect


def test_sweep_parallel_identical(sweep120):
    par = run_em_sweep(max_order=120, jobs=2)
    assert reports_to_json(par, max_order=120) == reports_to_json(
        sweep120, max_order=120
    )


# ---------------------------------------------------------------------------
# serialization


def test_json_document(sweep120):
    doc = json.loads(reports_to_json(sweep120, max_order=120))
    assert doc["schema_version"] == 1
    assert doc["catalog"] == "builtin"
    assert doc["prime"] == "all"
    assert doc["n_reports"] == 76
    assert doc["n_hypothesis_instances"] == 20
    assert doc["all_theorem_hold"] is True
    first = doc["reports"][0]
    assert "elapsed_ms" not in first
    assert set(first) == set(CSV_COLUMNS)


def test_csv_shape(sweep120):
    lines = reports_to_csv(sweep120).splitlines()
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert len(lines) == 77
    s4_rows = [ln for ln in lines if ln.startswith("S4,24,2,")]
    assert s4_rows == ["S4,24,2,8,1 2,true,1,1,1,2,true,true,true,true,"]


def test_csv_timings_column(sweep120):
    lines = reports_to_csv(sweep120[:1], timings=True).splitlines()
    assert lines[0].endswith(",elapsed_ms")


def test_write_reports(tmp_path, sweep120):
    out = tmp_path / "em.json"
    paths = write_reports(sweep120, str(out), max_order=120)
    assert tuple(p.rsplit(".", 1)[1] for p in paths) == ("json", "csv", "png")
    for p in paths:
        assert (tmp_path / p.rsplit("/", 1)[1]).stat().st_size > 0
    doc = json.loads(out.read_text())
    assert doc["n_reports"] == 76


def test_render_figure_empty(tmp_path, sweep120):
    path = tmp_path / "fig.png"
    render_figure(sweep120[:5], str(path))
    assert path.stat().st_size > 0


# ---------------------------------------------------------------------------
# lemma suites


def test_suite_registry():
    assert set(SUITES) == {
        "ti-sylow",
        "linear-extension",
        "solvable-principal",
        "concealed-degree",
        "block-covering",
        "constrained-single-block",
        "regular-partition-orbits",
        "hook-degrees",
        "exceptional-orbits",
        "orbit-theorems",
        "imprimitive",
    }


def test_single_suite():
    (res,) = run_lemma_suites(["hook-degrees"])
    assert res.name == "hook-degrees"
    assert res.passed and res.checks > 50
    assert res.failures == ()


def test_unknown_suite():
    with pytest.raises(ValueError, match="unknown suite"):
        run_lemma_suites(["not-a-suite"])

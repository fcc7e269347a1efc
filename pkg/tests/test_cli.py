"""Command-line interface: outputs, exit codes, environment knobs."""

import json
from pathlib import Path

import pytest

import blockheight
import blockheight.cli as cli
from blockheight.verify import EmReport, SuiteResult

REPO_FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
PKG_FIXTURES = Path(blockheight.__file__).resolve().parent / "fixtures"

S4 = str(REPO_FIXTURES / "s4.pgrp")
D10 = str(REPO_FIXTURES / "d10.pgrp")
WR3 = str(REPO_FIXTURES / "wr3.mgrp")


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


# ---------------------------------------------------------------------------
# query commands


def test_hooks(capsys):
    code, out, _ = run(capsys, "hooks", "8", "5")
    assert code == 0
    assert out.splitlines() == ["lambda = (5,1,1,1)", "degree = 35", "5-part = 5"]


def test_hooks_no_hook_case(capsys):
    code, _, err = run(capsys, "hooks", "6", "3")
    assert code == 2
    assert "excluded" in err


def test_chartab_pretty(capsys):
    code, out, _ = run(capsys, "chartab", S4)
    assert code == 0
    assert "s4" in out and "5 classes" in out


def test_chartab_json(capsys):
    code, out, _ = run(capsys, "chartab", S4, "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["order"] == 24
    assert doc["degrees"] == [1, 1, 2, 3, 3]


def test_blocks(capsys):
    code, out, _ = run(capsys, "blocks", S4, "-p", "2")
    assert code == 0
    assert "1 block(s)" in out
    assert "defect 3" in out and "mh = 1" in out


def test_mh_pass(capsys):
    code, out, _ = run(capsys, "mh", S4, "-p", "2")
    assert code == 0
    assert "mh(B0(G)) = 1" in out
    assert "witness degree: 2" in out
    assert out.rstrip().endswith("pass")


def test_mh_fail_exit(capsys, monkeypatch):
    bad = EmReport(
        group="s4",
        order=24,
        p=2,
        sylow_order=8,
        cd_P=(1, 2),
        hypothesis_holds=True,
        a=1,
        mh_B0=2,
        mh_P=1,
        witness_degree=2,
        theorem_holds=False,
        em_equality_observed=False,
        solvable=True,
        b0_equals_quotient_irr=True,
        bhz_holds=None,
        elapsed_ms=0,
    )
    monkeypatch.setattr(cli, "check_theorem_A", lambda *a, **k: bad)
    code, out, _ = run(capsys, "mh", S4, "-p", "2")
    assert code == 1
    assert "FAIL" in out


def test_concealed_yes(capsys):
    code, out, _ = run(capsys, "concealed", D10, "-p", "2")
    assert code == 0
    assert "p-concealed: yes" in out
    assert "(1, 2), (5, 6)" in out


def test_concealed_no(capsys):
    code, out, _ = run(capsys, "concealed", S4, "-p", "2")
    assert code == 0
    assert "p-concealed: no" in out
    assert "intersecting subset" in out


def test_exceptional_no(capsys):
    code, out, _ = run(capsys, "exceptional", WR3)
    assert code == 0
    assert "orbit sizes on V: [1, 6, 8, 12]" in out
    assert "p-exceptional (p = 3): no" in out
    assert "size divisible by 3" in out


def test_exceptional_yes(capsys):
    code, out, _ = run(capsys, "exceptional", str(PKG_FIXTURES / "sl2_5_gl4_3.mgrp"))
    assert code == 0
    assert "orbit sizes on V: [1, 40, 40]" in out
    assert "p-exceptional (p = 3): yes" in out


# ---------------------------------------------------------------------------
# verify commands


def test_verify_em(capsys, tmp_path):
    out_file = tmp_path / "em.json"
    code, out, _ = run(
        capsys, "verify", "em", "--max-order", "60", "--out", str(out_file)
    )
    assert code == 0
    assert "hypothesis instances" in out
    for suffix in (".json", ".csv", ".png"):
        assert out_file.with_suffix(suffix).stat().st_size > 0
    doc = json.loads(out_file.read_text())
    assert doc["schema_version"] == 1
    assert doc["max_order"] == 60
    assert doc["all_theorem_hold"] is True


def test_verify_em_env_cap(capsys, monkeypatch):
    monkeypatch.setenv("EM_MAX_ORDER", "24")
    code, out, _ = run(capsys, "verify", "em", "-p", "2")
    assert code == 0
    assert "S4" in out and "SL2(3)" in out and "S5" not in out


def test_verify_em_empty_exit(capsys):
    code, out, _ = run(capsys, "verify", "em", "--max-order", "1")
    assert code == 1


def test_verify_lemmas_single(capsys):
    code, out, _ = run(capsys, "verify", "lemmas", "--suite", "hook-degrees")
    assert code == 0
    assert "hook-degrees" in out and "pass" in out


def test_verify_lemmas_failure_exit(capsys, monkeypatch):
    res = SuiteResult("hook-degrees", False, 3, ("bad instance",))
    monkeypatch.setattr(cli, "run_lemma_suites", lambda *a, **k: [res])
    code, out, _ = run(capsys, "verify", "lemmas", "--suite", "hook-degrees")
    assert code == 1
    assert "bad instance" in out


# ---------------------------------------------------------------------------
# usage errors


def test_missing_file(capsys):
    code, _, err = run(capsys, "chartab", "no-such-file.pgrp")
    assert code == 2
    assert err


def test_bad_suffix(capsys, tmp_path):
    path = tmp_path / "g.txt"
    path.write_text("degree 2\ngen (1,2)\n")
    code, _, err = run(capsys, "chartab", str(path))
    assert code == 2


def test_composite_prime(capsys):
    code, _, err = run(capsys, "blocks", S4, "-p", "4")
    assert code == 2
    assert "prime" in err


def test_bad_suite_name(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", "lemmas", "--suite", "nope"])
    assert exc.value.code == 2

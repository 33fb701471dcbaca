import json

from spinchar.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_spin_rank_one_series_entry(capsys):
    code, out = run_cli(capsys, "spin", "--type", "A1", "--weight", "8")
    assert code == 0
    assert "V_(10)" in out and "V_(4)" in out
    assert "| no |" in out  # two summands: not co-primary


def test_spin_g2_little_adjoint(capsys):
    code, out = run_cli(capsys, "spin", "--type", "G2", "--weight", "1,0")
    assert code == 0
    assert "V_(1,0)" in out and "V_(0,0)" in out


def test_spin_c3_little_adjoint_coprimary(capsys):
    code, out = run_cli(capsys, "spin", "--type", "C3", "--weight", "0,1,0")
    assert code == 0
    assert "V_(1,1,0)" in out
    assert "| yes |" in out


def test_json_output_round_trips(capsys):
    code, out = run_cli(capsys, "spin", "--type", "A1", "--weight", "4",
                        "--format", "json")
    assert code == 0
    data = json.loads(out)
    report = data["spin"][0]
    assert report["orthogonality"] == "orthogonal"
    assert report["coprimary"] is True
    assert report["spin0_decomposition"][0]["fw"] == ["3"]


def test_usage_error_exit_code(capsys):
    code = main(["spin", "--type", "B99", "--weight", "1"])
    assert code == 2
    code = main(["spin", "--type", "B2", "--weight", "1"])  # wrong arity
    assert code == 2


def test_budget_refusal_exit_code(capsys):
    code = main(["spin", "--type", "F4", "--weight", "1,0,0,0",
                 "--weyl-budget", "100"])
    assert code == 3


def test_verify_suite_exit_zero(capsys):
    code, out = run_cli(capsys, "verify", "--suite", "spin-series")
    assert code == 0
    assert "summary:" in out
    assert "FAIL" not in out


def test_verify_skips_are_not_failures(capsys):
    code, out = run_cli(capsys, "verify", "--suite", "identity",
                        "--weyl-budget", "50")
    assert code == 0
    assert "SKIP" in out


def test_classify_rank_one(capsys):
    code, out = run_cli(capsys, "classify", "--rank-bound", "1",
                        "--height-bound", "8")
    assert code == 0
    assert "(2)" in out and "(4)" in out
    assert "2 co-primary modules" in out


def test_classify_deterministic(capsys):
    _, first = run_cli(capsys, "classify", "--rank-bound", "1",
                       "--height-bound", "6", "--format", "json")
    _, second = run_cli(capsys, "classify", "--rank-bound", "1",
                        "--height-bound", "6", "--format", "json")
    assert first == second


def test_show_root_system(capsys):
    code, out = run_cli(capsys, "show", "--type", "F4", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["root_system"]["type"] == "F4"
    assert data["root_system"]["bourbaki_numbering"] == [4, 3, 2, 1]
    assert len(data["root_system"]["positive_roots"]) == 24


def test_show_grading_dumps_section(capsys):
    code, out = run_cli(capsys, "show", "--grading", "F4/B4", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["grading"]["multiplicity_free"] is True
    assert len(data["grading"]["summands"]) == 3
    assert data["grading"]["casimir_value"] == "18"
    assert len(data["grading"]["coset_section"]) == 3


def test_env_override(capsys, monkeypatch):
    monkeypatch.setenv("SPINCHAR_FORMAT", "json")
    code, out = run_cli(capsys, "spin", "--type", "A1", "--weight", "2")
    assert code == 0
    json.loads(out)


def test_family_and_rank_flags(capsys):
    code, out = run_cli(capsys, "spin", "--type", "B", "--rank", "2",
                        "--weight", "0,2")
    assert code == 0
    assert "V_(1,1)" in out  # adjoint Spin0 head is rho


def test_table_emitter(capsys):
    code, out = run_cli(capsys, "verify", "--suite", "table1",
                        "--format", "markdown")
    assert code == 0
    assert "| algebra | module | dim P | Poincare polynomial |" in out
    assert "(1+t^9)(1+t^17)" in out

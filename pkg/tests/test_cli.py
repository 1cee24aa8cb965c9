import json

import pytest

from codebench.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_field_json(capsys):
    code, out = run(capsys, "--format", "json", "field", "3", "2")
    assert code == 0
    assert json.loads(out) == {"p": 3, "m": 2, "modulus": [2, 1, 1]}


def test_coset_single(capsys):
    code, out = run(capsys, "--format", "json", "coset", "10", "9", "--s", "3")
    assert code == 0
    assert json.loads(out) == [{"n": 10, "q": 9, "leader": 3, "members": [3, 7]}]


def test_coset_csv_partition(capsys):
    code, out = run(capsys, "--format", "csv", "coset", "33", "2")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "n,q,leader,size,members"
    assert sum(int(line.split(",")[3]) for line in lines[1:]) == 33


def test_build_json(capsys):
    code, out = run(capsys, "--format", "json", "build", "9", "10", "3", "3")
    assert code == 0
    payload = json.loads(out)
    assert (payload["q"], payload["n"], payload["k"]) == (9, 10, 6)
    assert payload["family"] == "q-minus-pi"


def test_build_words_dump(capsys):
    code, out = run(capsys, "build", "3", "10", "3", "3", "--words")
    assert code == 0
    lines = out.strip().split("\n")
    assert len(lines) == 9  # 3^2 codewords of the [10,2] ternary code
    assert all(len(line.split()) == 10 for line in lines)


def test_wdist_dual_csv(capsys):
    code, out = run(capsys, "--format", "csv", "wdist", "--q", "9", "--h", "3",
                    "--side", "dual")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "i,A_i"
    assert len(lines) == 6  # five nonzero rows
    assert sum(int(line.split(",")[1]) for line in lines[1:]) == 6561


def test_classify_json(capsys):
    code, out = run(capsys, "--format", "json", "classify", "--q", "9", "--h", "3")
    assert code == 0
    assert json.loads(out) == {"label": "NMDS", "d": 4, "d_dual": 6}


def test_design_block_file(capsys):
    code, out = run(capsys, "design", "--q", "9", "--h", "3", "--weight", "4",
                    "--source", "det")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "10 4 30"
    assert len(lines) == 31


def test_design_dual_certificate(capsys):
    code, out = run(capsys, "--format", "json", "design", "--q", "9", "--h", "3",
                    "--weight", "6", "--source", "dual")
    assert code == 0
    assert json.loads(out) == {"n": 10, "k": 6, "t": 3, "lambda": 5, "b": 30,
                               "steiner": False}


def test_subfield_tables_csv(capsys):
    code, out = run(capsys, "--format", "csv", "subfield", "--tables",
                    "--label", "ternary", "--budget", "2000000")
    assert code == 0
    assert "9,3,1,10,2,5,10,8,2" in out


def test_verify_pass_exit0(capsys):
    code, out = run(capsys, "verify", "cor3.1", "--s", "3", "--i", "1")
    assert code == 0
    assert "VERIFIED" in out


def test_verify_json_assertions(capsys):
    code, out = run(capsys, "--format", "json", "verify", "thm3.5", "--q", "4")
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] is True
    assert len(payload["assertions"]) == 5
    assert all(a["passed"] for a in payload["assertions"])


def test_verify_failed_precondition_exit1(capsys):
    # gcd(i, s) != 1 records a failed assertion: falsified run
    code, out = run(capsys, "verify", "cor3.1", "--s", "4", "--i", "2")
    assert code == 1
    assert "FALSIFIED" in out


def test_verify_missing_args_exit2(capsys):
    code, _ = run(capsys, "verify", "cor3.1")
    assert code == 2


def test_unknown_theorem_exit2(capsys):
    assert main(["verify", "nonsense"]) == 2


def test_budget_exceeded_exit3(capsys):
    code, _ = run(capsys, "--budget", "100", "wdist", "--q", "9", "--h", "3")
    assert code == 3


def test_out_file_byte_identical(tmp_path, capsys):
    p1, p2 = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(["--format", "csv", "--out", str(p1), "wdist", "--q", "9",
                 "--h", "3", "--side", "dual"]) == 0
    assert main(["--format", "csv", "--out", str(p2), "wdist", "--q", "9",
                 "--h", "3", "--side", "dual"]) == 0
    b1, b2 = p1.read_bytes(), p2.read_bytes()
    assert b1 == b2
    assert b"\r" not in b1


def test_workbench_budget_env(monkeypatch):
    from codebench.config import default_budget

    monkeypatch.setenv("WORKBENCH_BUDGET", "12345")
    assert default_budget() == 12345
    monkeypatch.setenv("WORKBENCH_BUDGET", "0")
    with pytest.raises(ValueError):
        default_budget()


def test_cli_threads_smoke(capsys):
    code1, out1 = run(capsys, "--format", "csv", "--threads", "3", "wdist",
                      "--q", "9", "--h", "3", "--side", "dual")
    code2, out2 = run(capsys, "--format", "csv", "wdist",
                      "--q", "9", "--h", "3", "--side", "dual")
    assert code1 == code2 == 0
    assert out1 == out2


def test_cli_verify_thm41_instance(capsys):
    code, out = run(capsys, "verify", "thm4.1", "--q", "16", "--i", "2",
                    "--family", "q-minus-pi")
    assert code == 0
    assert "VERIFIED" in out


def test_subfield_single_subcode(capsys):
    code, out = run(capsys, "--format", "json", "subfield", "--q", "16",
                    "--h", "4", "--t", "2")
    assert code == 0
    payload = json.loads(out)
    assert (payload["n"], payload["k"], payload["d"]) == (17, 9, 7)


def test_design_code_source(capsys):
    code, out = run(capsys, "design", "--q", "9", "--h", "3", "--weight", "5",
                    "--source", "code")
    assert code == 0
    assert out.startswith("10 5 72\n")


def test_run_config_validation():
    from codebench.config import RunConfig

    cfg = RunConfig()
    assert (cfg.budget, cfg.threads, cfg.output_format, cfg.seed) == (1 << 26, 1, "text", 0)
    with pytest.raises(ValueError):
        RunConfig(threads=0)
    with pytest.raises(ValueError):
        RunConfig(budget=0)
    with pytest.raises(ValueError):
        RunConfig(output_format="xml")


def test_cli_rejects_bad_thread_count(capsys):
    assert main(["--threads", "0", "field", "3", "2"]) == 2

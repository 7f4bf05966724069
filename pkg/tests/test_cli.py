import json

import pytest

from derivrecon.cli import main
from derivrecon.derivspace import e_space
from derivrecon.genericity import ExperimentConfig, run_experiment
from derivrecon.polyring import parse


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_dims_and_diff(capsys):
    assert run(capsys, "dims", "-n", "2", "-d", "3") == (0, "10\n", "")
    assert run(capsys, "diff", "-p", "x0^2*x1", "-n", "1", "-I", "1,0") == (0, "2*x0*x1\n", "")
    code, out, _ = run(capsys, "diff", "-p", "x0^2*x1", "-I", "2,1", "--format", "json")
    assert json.loads(out)["result"] == "2"


def test_apolar_and_matrix(capsys):
    assert run(capsys, "apolar", "-P", "y0*y1", "-p", "x0^2*x1")[1] == "2*x0\n"
    code, out, _ = run(capsys, "cat-matrix", "-p", "x0^4 + x0*x1^3", "-k", "2")
    assert out == "12 0 0\n0 0 3\n0 6 0\n"
    code, out, _ = run(capsys, "cat-matrix", "-p", "x0^4 + x0*x1^3", "-k", "2", "--format", "json")
    assert json.loads(out)["rows"] == 3


def test_dim_profile_certify(capsys):
    assert run(capsys, "ek-dim", "-p", "x0^4+x1^4", "-k", "2")[1] == "2\n"
    assert run(capsys, "certify", "-p", "x0^4 + x0*x1^3", "-k", "2")[1] == "true\n"
    code, out, _ = run(capsys, "profile", "-p", "x0^4+x1^4", "--format", "json")
    assert json.loads(out)["dims"] == [1, 2, 2, 2, 1]


def test_reconstruct_from_file(capsys, tmp_path):
    span = tmp_path / "span.json"
    span.write_text(e_space(parse("x0^4 + x0*x1^3", 1), 1).to_json())
    code, out, _ = run(capsys, "reconstruct", "-V", str(span), "-n", "1", "-d", "4", "-k", "1",
                       "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["verdict"] == "UNIQUE" and data["basis"] == ["x0^4 + x0*x1^3"]


def test_span_output_round_trips(capsys, tmp_path):
    path = tmp_path / "v.json"
    assert run(capsys, "span", "-p", "x0^4 + x0*x1^3", "-k", "1", "-o", str(path))[0] == 0
    code, out, _ = run(capsys, "reconstruct", "-V", str(path), "-k", "1")
    assert out.splitlines()[:2] == ["verdict: UNIQUE", "solution_dim: 1"]


def test_verify_commands(capsys, tmp_path):
    code, out, _ = run(capsys, "verify-theorem", "-p", "x0^4 + x0*x1^3", "-k", "1", "--format", "json")
    assert code == 0 and json.loads(out)["verdict"] == "UNIQUE"
    code, out, _ = run(capsys, "verify-theorem", "-p", "x0^4 + x1^4", "-k", "1")
    assert code == 0 and "verdict: AMBIGUOUS" in out
    gfile = tmp_path / "g.txt"
    gfile.write_text("-1/2*x0^6 + 3/2*x0*x1^5 - x1^6\n")
    code, out, _ = run(capsys, "verify-prop1", "-p", "x0^6 - 3*x0*x1^5 + 2*x1^6",
                       "-G", str(gfile), "-k", "2", "--format", "json")
    data = json.loads(out)
    assert data["symmetry_ok"] and data["descent_matches"] and data["euler_ok"]


def test_fingerprint_sample(capsys):
    a = run(capsys, "fingerprint", "-p", "x0^4 + x0*x1^3", "-k", "1")[1]
    b = run(capsys, "fingerprint", "-p", "-3*x0^4 - 3*x0*x1^3", "-k", "1")[1]
    assert a == b and len(a.strip()) == 64
    s1 = run(capsys, "sample", "-n", "2", "-d", "3", "--seed", "5")[1]
    s2 = run(capsys, "sample", "-n", "2", "-d", "3", "--seed", "5")[1]
    assert s1 == s2


def test_seed_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("DERIVSPACE_SEED", "5")
    env = run(capsys, "sample", "-n", "2", "-d", "3")[1]
    monkeypatch.delenv("DERIVSPACE_SEED")
    assert env == run(capsys, "sample", "-n", "2", "-d", "3", "--seed", "5")[1]


def test_experiment_csv_matches_module(capsys, tmp_path):
    out_path = tmp_path / "r.csv"
    code, _, _ = run(capsys, "experiment", "--kind", "theorem", "-n", "1", "-d", "4", "-k", "1",
                     "--trials", "3", "--seed", "9", "--format", "csv", "-o", str(out_path))
    direct = run_experiment(ExperimentConfig("theorem", 1, 4, 1, 3, seed=9)).to_csv()
    assert code == 0 and out_path.read_text() == direct
    code, out, _ = run(capsys, "collide", "-n", "1", "-d", "6", "-k", "1", "--trials", "5")
    assert code == 0 and "collisions: []" in out


def test_error_codes(capsys):
    code, _, err = run(capsys, "diff", "-p", "x0^2 + x1", "-I", "1,0")
    assert code == 1 and "NotHomogeneous" in err
    code, _, err = run(capsys, "profile", "-p", "0", "-n", "1")
    assert code == 1 and "ZeroPolynomial" in err
    code, _, err = run(capsys, "experiment", "--kind", "chain", "-n", "1", "-d", "4", "-k", "1",
                       "--trials", "0")
    assert code == 1 and "ConfigInvalid" in err
    with pytest.raises(SystemExit) as exc:
        main(["diff", "-p", "x0", "-I", "a,b"])
    assert exc.value.code == 2
    assert "-I" in capsys.readouterr().err
    with pytest.raises(SystemExit) as exc:
        main(["dims", "-n", "2"])
    assert exc.value.code == 2


def test_theorem_violation_exit_code(capsys, monkeypatch):
    import derivrecon.cli as cli
    from derivrecon.reconstruct import verify_theorem

    def broken(f, k):
        rep = verify_theorem(f, k)
        rep.verdict, rep.solution_dim = "AMBIGUOUS", 2
        return rep

    monkeypatch.setattr(cli, "verify_theorem", broken)
    code, out, _ = run(capsys, "verify-theorem", "-p", "x0^4 + x0*x1^3", "-k", "1")
    assert code == 3 and "THEOREM VIOLATION" in out

import json

import pytest

from scrollcert.certificate import certificates_from_csv
from scrollcert.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_certify_p3_family(capsys):
    code, out, _ = run(capsys, "certify", "--k", "1", "--n", "3")
    rep = json.loads(out)
    assert code == 0 and rep["schema"] == 1
    fams = [c["family"] for c in rep["certificates"] if c["strategy"] == "oddG"]
    assert {"base": 2, "step": 1, "r_max": 9} in fams
    assert rep["degrees"][:5] == [2, 3, 4, 5, 6]


def test_certify_beta(capsys):
    code, out, _ = run(capsys, "certify", "--k", "3", "--n", "8", "--strategy", "beta", "--beta", "3")
    rep = json.loads(out)
    assert code == 0 and rep["degrees"][:3] == [5, 15, 25]


def test_input_errors(capsys):
    assert run(capsys, "certify", "--k", "2", "--n", "4")[0] == 1
    assert run(capsys, "certify", "--k", "2", "--n", "7", "--strategy", "bogus")[0] == 1
    assert run(capsys, "certify", "--k", "2", "--n", "7", "--strategy", "beta")[0] == 1
    assert run(capsys, "certify", "--k", "2", "--n", "7", "--max-e0", "0")[0] == 1
    assert run(capsys, "oracle", "--prime", "100")[0] == 1
    assert run(capsys, "examples", "--only", "nothing")[0] == 1


def test_none_found_exit_2(capsys):
    code, out, _ = run(capsys, "certify", "--k", "3", "--n", "8", "--strategy", "beta", "--beta", "3", "--max-e0", "2", "--max-e1", "2")
    assert code == 2 and json.loads(out)["count"] == 0


def test_json_csv_same_data(capsys):
    args = ["certify", "--k", "1", "--n", "10", "--max-e0", "20", "--max-e1", "20", "--max-eplus", "20"]
    _, js, _ = run(capsys, *args)
    _, cs, _ = run(capsys, *args, "--format", "csv")
    assert certificates_from_csv(cs) == json.loads(js)["certificates"]


def test_deterministic_output(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for p in (a, b):
        main(["certify", "--k", "2", "--n", "7", "--max-e0", "15", "--max-e1", "15", "--max-eplus", "15", "--out", str(p)])
    assert a.read_bytes() == b.read_bytes()


def test_oracle_empty_bounds_warns(capsys):
    code, out, err = run(capsys, "oracle", "--max-rank", "0")
    assert code == 0 and json.loads(out)["checks_run"] == 0 and "warning" in err


def test_oracle_small(capsys):
    code, out, _ = run(capsys, "oracle", "--max-rank", "2", "--degree-hi", "2", "--m-max", "3", "--ell-max", "4")
    rep = json.loads(out)
    assert code == 0 and rep["failures"] == [] and rep["checks_run"] > 0


def test_oracle_tiny_prime_reports(capsys):
    code, out, _ = run(capsys, "oracle", "--max-rank", "3", "--degree-hi", "2", "--m-max", "3", "--ell-max", "4", "--prime", "101", "--trials", "1")
    rep = json.loads(out)
    assert rep["low_prime_problems"] > 0
    assert code == (2 if rep["failures"] else 0)


def test_examples_only_filter(capsys):
    code, out, _ = run(capsys, "examples", "--only", "oddg")
    rep = json.loads(out)
    assert code == 0 and [b["name"] for b in rep["blocks"]] == ["oddg"]


@pytest.mark.slow
def test_examples_full_battery(capsys):
    code, out, _ = run(capsys, "examples")
    rep = json.loads(out)
    assert code == 0 and rep["passed"]
    text = " ".join(rep["flags"])
    for needle in ("printed denominator", "g_i", "c2-balance"):
        assert needle in text

import json

import pytest

from qclifford.cli import main
from qclifford.clifford import CliffordAlgebra, CliffordElement
from qclifford.scalar import SYMBOLIC, Scalar

f = SYMBOLIC
q, c = f.q, f.c


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_nf_31(capsys):
    code, out, _ = run(capsys, "nf", "--N", "3", "3", "1")
    assert code == 0
    x = CliffordElement.from_json(json.loads(out))
    A = CliffordAlgebra(3)
    assert x == -A.monomial(0b101) + c ** 2 * q ** 2 * f.qp * A.one()


def test_nf_zero(capsys):
    code, out, _ = run(capsys, "nf", "--N", "4", "1", "1")
    assert code == 0 and json.loads(out)["terms"] == []


def test_nf_exterior(capsys):
    code, out, _ = run(capsys, "nf", "--N", "3", "--c", "0", "3", "1")
    doc = json.loads(out)
    assert code == 0 and doc["c"] == "zero"
    assert [t["mask"] for t in doc["terms"]] == ["101"]
    assert Scalar.from_json(doc["terms"][0]["coeff"]) == Scalar(-1)


def test_nf_pretty(capsys):
    code, out, _ = run(capsys, "nf", "--N", "4", "--format", "pretty", "2", "1")
    assert code == 0 and out.strip() == "(-q^2)*g1g2"


def test_nf_bad_index(capsys):
    code, _, err = run(capsys, "nf", "--N", "3", "4", "1")
    assert code == 2 and "outside" in err


def test_nf_round_trip_specialized(capsys, tmp_path):
    out = tmp_path / "x.json"
    code, _, _ = run(capsys, "nf", "--N", "5", "--q", "5/3", "--c", "2", "--out", str(out),
                     "5", "2", "1")
    assert code == 0
    doc = json.loads(out.read_text())
    x = CliffordElement.from_json(doc)
    assert x.to_json() == doc


@pytest.mark.parametrize("argv", [
    ("nf", "--N", "2", "1"),
    ("nf", "--N", "3", "--q", "1", "1"),
    ("nf", "--N", "3", "--q", "5/3", "--c", "symbolic", "1"),
    ("nf", "--N", "3", "--q", "abc", "1"),
    ("verify", "--N", "3", "nosuch"),
    ("export", "spinrep", "--N", "3", "--nu", "2"),
    ("export", "antisym", "--N", "3"),
    ("export", "antisym", "--N", "3", "--k", "4"),
    ("export", "z-elements", "--N", "3", "--c", "0"),
    ("frobnicate",),
])
def test_usage_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_verify_n3_pi(capsys):
    code, out, _ = run(capsys, "verify", "--N", "3", "pi")
    doc = json.loads(out)
    assert code == 0 and doc["passed"]
    names = [r["suite"] for r in doc["reports"]]
    assert names == sorted(names)


def test_verify_suite_flag(capsys):
    code, out, _ = run(capsys, "verify", "--N", "3", "--suite", "center")
    assert code == 0 and json.loads(out)["suite"] == "center"


def test_verify_resource_cap(capsys):
    code, _, err = run(capsys, "verify", "--N", "5", "bwm")
    assert code == 3 and "--q" in err


def test_verify_jobs_matches_serial(capsys):
    code1, out1, _ = run(capsys, "verify", "--N", "3", "all")
    code2, out2, _ = run(capsys, "verify", "--N", "3", "all", "--jobs", "2")
    assert code1 == code2 == 0
    assert out1 == out2


def test_verify_failure_exit_code(capsys, monkeypatch):
    from qclifford import cli
    from qclifford.report import Report

    def broken(*_):
        rep = Report("broken")
        rep.add("always", False)
        return [rep]

    monkeypatch.setattr(cli, "run_suite", broken)
    code, out, _ = run(capsys, "verify", "--N", "3", "pi")
    assert code == 1 and not json.loads(out)["passed"]


def test_export_spinrep(capsys):
    code, out, _ = run(capsys, "export", "spinrep", "--N", "5", "--nu", "+1")
    doc = json.loads(out)
    assert code == 0 and doc["dim"] == 4
    assert len(doc["matrices"]) == 5 * 2
    for m in doc["matrices"]:
        assert all(0 <= r < 4 and 0 <= col < 4 for r, col, _ in m["entries"])


def test_export_t1_has_s(capsys):
    code, out, _ = run(capsys, "export", "t1", "--N", "3")
    doc = json.loads(out)
    f1 = next(m for m in doc["matrices"] if m["generator"] == "F1")
    coeffs = [Scalar.from_json(v) for _, _, v in f1["entries"]]
    assert code == 0 and all(x.b for x in coeffs)


def test_export_antisym_is_p_minus(capsys):
    from qclifford.braid import BWM
    code, out, _ = run(capsys, "export", "antisym", "--N", "3", "--k", "2")
    doc = json.loads(out)
    assert code == 0
    minus = BWM(3).projectors()[1]
    want = [[r, col, f.to_scalar(v)] for r, col, v in minus.entries(f.one)]
    got = [[r, col, Scalar.from_json(v)] for r, col, v in doc["entries"]]
    assert got == want


def test_export_deterministic(capsys):
    outs = [run(capsys, "export", "pi-images", "--N", "4")[1] for _ in range(2)]
    assert outs[0] == outs[1]


def test_export_z_elements(capsys):
    code, out, _ = run(capsys, "export", "z-elements", "--N", "4")
    doc = json.loads(out)
    assert code == 0 and set(doc) == {"z0"}


def test_export_rhat_cap(capsys, monkeypatch):
    monkeypatch.setenv("QCLIFFORD_MAX_DIM", "4")
    code, _, _ = run(capsys, "export", "rhat", "--N", "3")
    assert code == 3

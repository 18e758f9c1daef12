import json
import subprocess
import sys

import pytest

from lgmirror.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_mirror_boxed(capsys):
    code, out, _ = run(capsys, "mirror", "--n", "2")
    assert code == 0
    assert "equation:  z1*w1*t1*t2 + y1*w1*t1 + y1*z1*t2 + y1^2 = x1*x2*y1*z1*w1" in out


def test_mirror_numeric_json(capsys):
    code, out, _ = run(capsys, "mirror", "--n", "2", "--t1", "1", "--t2", "1", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["equation"] == "y1^2 + y1*z1 + y1*w1 + z1*w1 = x1*x2*y1*z1*w1"
    assert data["pencil"]["g"] == "y1*z1*w1"


def test_mirror_rank_one(capsys):
    code, _, err = run(capsys, "mirror", "--n", "1")
    assert code == 2 and "theta" in err


def test_res_golden(capsys):
    code, out, _ = run(capsys, "res", "--n", "4", "--i", "1", "--len", "5", "--json")
    data = json.loads(out)
    assert code == 0 and data["exact"]
    assert data["maps"] == ["[z1]", "[z2*z3*z4]", "[z1]", "[z2*z3*z4]", "[z1]"]
    assert data["transcript"] == ("S^1 <--[z1]-- S^1 <--[z2*z3*z4]-- S^1 <--[z1]-- S^1 "
                                  "<--[z2*z3*z4]-- S^1 <--[z1]-- S^1")


def test_res_n2(capsys):
    code, out, _ = run(capsys, "res", "--n", "2", "--i", "2", "--len", "2")
    assert code == 0
    assert out.splitlines()[1:3] == ["S^1 <--[z2]-- S^1", "S^1 <--[z1]-- S^1"]


def test_res_range(capsys):
    assert run(capsys, "res", "--n", "4", "--i", "9")[0] == 2


def test_res_small_bound(capsys):
    assert run(capsys, "res", "--n", "4", "--i", "1", "--degree-bound", "0")[0] == 2


def test_ext(capsys):
    code, out, _ = run(capsys, "ext", "--n", "4", "--i", "1", "--j", "2", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["ext"][1]["hilbert"]["3"] == 3


def test_theta(capsys):
    code, out, _ = run(capsys, "theta", "--json")
    assert code == 0
    assert json.loads(out)["surface"] == "x*y*u - x^2*v - x*v - v"


def test_verify_monodromy(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "monodromy")
    assert code == 0
    assert "[NOTE] monodromy / candidate (x1x2, 1-x2) second residual" in out


def test_verify_ext_n4(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "ext", "--n", "4", "--json")
    data = json.loads(out)
    assert code == 0 and data["passed"]
    assert len([c for c in data["checks"] if "Ext^" in c["anchor"]]) == 6 * 5


def test_verify_all_deterministic(capsys):
    a = run(capsys, "verify", "--suite", "all", "--seed", "7", "--json")
    b = run(capsys, "verify", "--suite", "all", "--seed", "7", "--json")
    assert a == b and a[0] == 0


def test_usage_errors(capsys):
    assert run(capsys, "verify", "--suite", "nope")[0] == 2
    assert run(capsys, "mirror")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "res", "--n", "3", "--i", "1", "--field", "zp:100")[0] == 2
    assert run(capsys, "mirror", "--n", "2", "--bogus")[0] == 2


def test_sings3_failure_names_anchor(capsys, monkeypatch):
    import lgmirror.verify as v
    from lgmirror.mirror import lg3_singular_report as real

    def broken(**kw):
        rep = real(**kw)
        rep.containment_verified = [True, False]
        return rep

    monkeypatch.setattr(v.mr, "lg3_singular_report", broken)
    code, out, _ = run(capsys, "verify", "--suite", "sings3")
    assert code == 1
    assert "[FAIL] sings3 / Lemma sings3 component 2" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "lgmirror", "res", "--n", "3", "--i", "2", "--len", "3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "S^1 <--[z2]-- S^1" in proc.stdout

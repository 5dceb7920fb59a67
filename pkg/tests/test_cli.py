import io
import json
import subprocess
import sys

import jsonschema
import pytest

from zerogeom import cli
from zerogeom.polycore import Poly
from zerogeom.schema import SCHEMAS


@pytest.fixture
def poly_file(tmp_path):
    def make(text):
        p = tmp_path / "p.txt"
        p.write_text(text)
        return str(p)

    return make


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def lines(out):
    return [json.loads(l) for l in out.splitlines() if l.strip()]


def validate(obj, kind):
    jsonschema.validate(obj, SCHEMAS[kind])


class TestCertify:
    def test_real_rooted(self, capsys, poly_file):
        code, out, _ = run(capsys, "certify", "real-rooted", poly_file("1 3 1"))
        (obj,) = lines(out)
        assert code == 0 and obj["verdict"] == "REAL_ROOTED"
        validate(obj, "certificate")

    def test_fail_exit_code(self, capsys, poly_file):
        code, out, _ = run(capsys, "certify", "real-rooted", poly_file("1 1 1"))
        assert code == 1 and lines(out)[0]["verdict"] == "FAIL"

    def test_p_plus_degree_bound(self, capsys, poly_file):
        code, out, _ = run(capsys, "certify", "p-plus", "--n", "1", poly_file("1 3 1"))
        assert code == 1

    def test_hurwitz_stdin(self, capsys, monkeypatch):
        code, out, _ = run(capsys, "certify", "hurwitz", "-", stdin='{"coeffs": ["1", "2", "1"]}', monkeypatch=monkeypatch)
        obj = lines(out)[0]
        assert code == 0 and obj["verdict"] == "WEAKLY_HURWITZ"
        validate(obj, "certificate")

    def test_table_output(self, capsys, poly_file):
        code, out, _ = run(capsys, "certify", "p-plus", poly_file("2 3 1"), "--output", "table")
        assert code == 0 and out.startswith("IN_P_PLUS")

    def test_malformed_input(self, capsys, poly_file):
        code, _, err = run(capsys, "certify", "real-rooted", poly_file("1 2/x"))
        assert code == 2 and "entry 1" in err

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run(capsys, "certify", "real-rooted", str(tmp_path / "nope"))
        assert code == 2 and err


class TestTransform:
    def test_L_text(self, capsys, poly_file):
        code, out, _ = run(capsys, "transform", "--op", "L", poly_file("1 2 1"))
        assert code == 0 and out == "1 3 1\n"

    def test_json(self, capsys, poly_file):
        code, out, _ = run(capsys, "transform", "--op", "U", "--alpha", "1,-1", poly_file("1 2 1"), "--output", "json")
        obj = lines(out)[0]
        validate(obj, "poly")
        assert obj == {"coeffs": ["1/1", "3/1", "1/1"]}

    @pytest.mark.parametrize("argv, want", [
        (["--op", "V", "--alpha", "1"], "2 2"),
        (["--op", "T", "--mu", "0:1,2:-1"], "1 0 1"),
        (["--op", "Sr", "--r", "0"], "0"),
        (["--op", "Sr-prime", "--r", "1"], "2 2"),
        (["--op", "turan"], "3 1"),
    ])
    def test_ops(self, capsys, poly_file, argv, want):
        src = "1 1" if "T" in argv else "1 2 1"
        code, out, _ = run(capsys, "transform", *argv, poly_file(src))
        assert code == 0 and out.strip() == want

    def test_missing_weights(self, capsys, poly_file):
        code, _, err = run(capsys, "transform", "--op", "U", poly_file("1 2 1"))
        assert code == 2 and "--alpha" in err


class TestIterate:
    def test_first_negative(self, capsys, poly_file):
        code, out, _ = run(capsys, "iterate", "--op", "L", "--depth", "2", poly_file("1 1 1"))
        obj = lines(out)[0]
        validate(obj, "iteration")
        assert code == 1 and obj["first_negative"] == {"iteration": 2, "index": 1, "value": "-1/1"}

    def test_full_depth(self, capsys, poly_file):
        code, out, _ = run(capsys, "--depth", "3", "iterate", "--op", "L", poly_file("1 4 6 4 1"))
        assert code == 0 and lines(out)[0]["depth_achieved"] == 3


class TestIdentity:
    def test_el_exp_full(self, capsys):
        code, out, _ = run(capsys, "identity", "--check", "el-exp", "--n", "4", "--mu", "1,0,-1", "--mode", "full")
        obj = lines(out)[0]
        validate(obj, "identity")
        assert code == 0 and obj["verdict"] is True

    def test_random_seeded(self, capsys):
        argv = ["identity", "--check", "beauty", "--n", "6", "--trials", "7", "--seed", "99"]
        code, out, _ = run(capsys, *argv)
        obj = lines(out)[0]
        assert code == 0 and obj["trials"] == 7

    def test_cap_is_usage_error(self, capsys):
        code, _, _ = run(capsys, "identity", "--check", "beauty", "--n", "40", "--mode", "full")
        assert code == 2


class TestExperiments:
    @pytest.mark.parametrize("check", ["coeffs", "logconcave", "fact0", "fact2", "qr"])
    def test_borosmoll(self, capsys, check):
        code, out, err = run(capsys, "borosmoll", "--m-max", "4", "--check", check, "--depth", "2")
        recs = lines(out)
        assert code == 0 and len(recs) == 5
        for r in recs:
            validate(r, "experiment")
        assert "PASS" in err

    def test_coeff_values(self, capsys):
        _, out, _ = run(capsys, "borosmoll", "--m-max", "2")
        assert lines(out)[2]["witness"]["d"] == ["21/8", "15/4", "3/2"]

    def test_multiplier_fail(self, capsys):
        code, out, _ = run(capsys, "multiplier", "--lambda", "1,0,1", "--n-max", "2")
        assert code == 1 and lines(out)[-1]["verdict"] == "FAIL"

    def test_multiplier_pass(self, capsys):
        code, _, _ = run(capsys, "multiplier", "--lambda", "1,1,1/2,1/6,1/24", "--n-max", "4")
        assert code == 0

    def test_sector(self, capsys, poly_file):
        code, out, _ = run(capsys, "sector", "--alpha", "1,-1", "--theta", "0.5236", "--poly", poly_file("1 3 3 1"))
        rec = lines(out)[0]
        validate(rec, "experiment")
        assert code == 0 and rec["verdict"] == "PASS"

    def test_timing_opt_in(self, capsys):
        _, out, _ = run(capsys, "borosmoll", "--m-max", "1", "--check", "fact0")
        assert "wall_time" not in lines(out)[0]
        _, out, _ = run(capsys, "--timing", "borosmoll", "--m-max", "1", "--check", "fact0")
        assert "wall_time" in lines(out)[0]


class TestDispatch:
    def test_no_command(self, capsys):
        assert run(capsys)[0] == 2

    def test_unknown_command(self, capsys):
        assert run(capsys, "frobnicate")[0] == 2

    def test_bad_flag(self, capsys):
        assert run(capsys, "certify", "maybe", "x")[0] == 2

    def test_help(self, capsys):
        assert run(capsys, "--help")[0] == 0

    def test_deterministic_bytes(self, capsys):
        argv = ["--seed", "17", "identity", "--check", "el-exp", "--n", "6", "--mu", "0:2,3:-1", "--trials", "5"]
        a = run(capsys, *argv)[1]
        b = run(capsys, *argv)[1]
        assert a == b and a
        argv = ["borosmoll", "--m-max", "6", "--check", "fact2", "--jobs", "2"]
        assert run(capsys, *argv)[1] == run(capsys, *argv)[1]

    def test_module_entry_point(self, tmp_path):
        f = tmp_path / "p.txt"
        f.write_text("1 2 1")
        res = subprocess.run([sys.executable, "-m", "zerogeom", "transform", "--op", "L", str(f)],
                             capture_output=True, text=True, check=False)
        assert res.returncode == 0 and res.stdout == "1 3 1\n"


class TestSelftest:
    def test_passes(self, capsys):
        code, out, err = run(capsys, "selftest")
        recs = lines(out)
        assert code == 0 and len(recs) == 13
        for r in recs:
            validate(r, "criterion")
        assert err.count("[PASS]") == 13

    def test_detects_corrupted_transform(self, capsys, monkeypatch):
        import zerogeom.acceptance as acc

        real = acc.op_L
        monkeypatch.setattr(acc, "op_L", lambda a: real(a) + Poly([0, 1]))
        code, out, _ = run(capsys, "selftest")
        assert code == 1
        assert any(r["verdict"] == "FAIL" for r in lines(out))

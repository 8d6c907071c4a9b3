import json
import subprocess
import sys

import pytest

from oddquant.cli import main
from oddquant.fpdata import parse_manifest


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def man(golden):
    return lambda stem: golden / "manifests" / f"{stem}.json"


@pytest.fixture
def spec(golden):
    return lambda stem: golden / "specs" / f"{stem}.json"


def test_quantize_euler_on(capsys, man):
    code, out, _ = run(capsys, "quantize", man("s2xs1_1_3_m3_1"), "--normal-factor", "euler", "--codim-sign", "on")
    assert (code, out) == (0, "-z^-1 - 1 - z\n")


def test_quantize_default_is_literal_off(capsys, man):
    assert run(capsys, "quantize", man("s2xs1_1_3_m3_1"))[:2] == (0, "z^-2 + z^2\n")


def test_quantize_even(capsys, man):
    assert run(capsys, "quantize", man("sphere_1_3_m3"))[:2] == (0, "-z^-1 - 1 - z\n")


def test_quantize_empty(capsys, man):
    assert run(capsys, "quantize", man("s3_2_3_0"))[:2] == (0, "0\n")


def test_quantize_malformed(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, out, err = run(capsys, "quantize", bad)
    assert code == 2 and out == "" and "error" in err


def test_quantize_missing_file(capsys, tmp_path):
    assert run(capsys, "quantize", tmp_path / "nope.json")[0] == 2


def test_quantize_validation_error(capsys, tmp_path):
    f = tmp_path / "p.json"
    f.write_text(json.dumps({"name": "N", "kind": "even", "half_dim": 1, "points": [{"id": "p", "mu": 0, "weights": [1], "sigma": 1}]}))
    assert run(capsys, "quantize", f)[0] == 2


def test_quantize_not_divisible(capsys, tmp_path):
    f = tmp_path / "lone.json"
    f.write_text(json.dumps({"name": "N", "kind": "even", "half_dim": 1, "points": [{"id": "p", "mu": 1, "weights": [1], "sigma": 1}]}))
    code, _, err = run(capsys, "quantize", f)
    assert code == 3 and "not divisible" in err


def test_up(capsys, man):
    code, out, _ = run(capsys, "up", man("sphere_1_3_m3"))
    assert code == 0
    m = parse_manifest(out)
    assert [(c.mu, c.n, c.sigma) for c in m.circles] == [(3, 1, 1), (-3, -1, 1)]
    assert m.alpha == {"N": 1, "S": 1}


def test_up_rejects_odd(capsys, man):
    assert run(capsys, "up", man("t3"))[0] == 2


def test_consum_flags(capsys, man):
    code, out, _ = run(capsys, "consum", man("consum_m1"), man("consum_m2"), "--left", "F1", "--right", "G1", "--l", 2)
    assert code == 0
    m = parse_manifest(out)
    (c,) = m.circles
    assert (c.mu, c.n, m.a(c.id)) == (6, 2, 2)


def test_consum_spec_file(capsys, man, spec):
    a = run(capsys, "consum", man("consum_m1"), man("consum_m2"), "--spec", spec("consum_F1_G1_l2"))
    b = run(capsys, "consum", man("consum_m1"), man("consum_m2"), "--left", "F1", "--right", "G1", "--l", 2)
    assert a == b


def test_consum_bad_spec(capsys, man):
    assert run(capsys, "consum", man("consum_m1"), man("consum_m2"), "--left", "F1", "--right", "G1", "--l", 3)[0] == 2
    assert run(capsys, "consum", man("consum_m1"), man("consum_m2"), "--left", "F1")[0] == 2


def test_cut_stdout(capsys, man, spec):
    code, out, _ = run(capsys, "cut", man("t3"), "--spec", spec("t3_cut"))
    assert code == 0
    doc = json.loads(out)
    plus, minus = parse_manifest(doc["plus"]), parse_manifest(doc["minus"])
    assert [c.sigma for c in plus.circles] == [1, 1]
    assert [c.sigma for c in minus.circles] == [-1, -1]
    assert [(c.mu, c.n) for c in plus.circles] == [(c.mu, c.n) for c in minus.circles]


def test_cut_files_then_quantize(capsys, man, spec, tmp_path):
    p, m = tmp_path / "p.json", tmp_path / "m.json"
    assert run(capsys, "cut", man("t3"), "--spec", spec("t3_cut"), "--plus-out", p, "--minus-out", m)[0] == 0
    qp = run(capsys, "quantize", p)[1]
    qm = run(capsys, "quantize", m)[1]
    assert qp == "2*z - 2*z^2\n"
    assert qm == "-2*z + 2*z^2\n"


def test_cut_bad_partition(capsys, man, spec):
    assert run(capsys, "cut", man("s2xs1_1_3_m3_1"), "--spec", spec("t3_cut"))[0] == 2


def test_reduce(capsys, spec):
    assert run(capsys, "reduce", "--spec", spec("seam_3_m1"))[:2] == (0, "2\n")


def test_qr(capsys, man, spec):
    code, out, _ = run(capsys, "qr", man("s3_2_3_0"), "--spec", spec("s3_cut"))
    assert code == 0
    assert out == "q_invariant: 0\nq_reduced: 0\nequal: true\nresult: pass\n"


def test_qr_mismatch_reports(capsys, man, spec):
    code, out, _ = run(capsys, "qr", man("s2xs1_1_3_m3_1"), "--spec", spec("s2xs1_cut"), "--normal-factor", "euler", "--codim-sign", "on")
    assert code == 0
    assert "q_invariant: -1\nq_reduced: -1\nequal: true" in out


def test_check_exit_codes(capsys, monkeypatch):
    code, out, _ = run(capsys, "check", "updown", "--cases", 50, "--seed", 7)
    assert code == 0
    assert "cases_run: 50\nfailures: 0\nresult: pass" in out

    from oddquant import checks
    from oddquant.localize import LITERAL_ON

    monkeypatch.setattr(checks, "EULER_ON", LITERAL_ON)
    code, out, _ = run(capsys, "check", "updown", "--cases", 5, "--seed", 7)
    assert code == 1 and out.rstrip().endswith("result: fail")


def test_check_s3zero(capsys):
    code, out, _ = run(capsys, "check", "s3zero")
    assert code == 0 and "result: pass" in out


def test_bad_subcommand_is_input_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_byte_identical_runs(man):
    cmds = [
        ["check", "all", "--seed", "5", "--cases", "20"],
        ["quantize", str(man("s2xs1_1_3_m3_1")), "--normal-factor", "euler"],
        ["up", str(man("sphere_2_4_m4"))],
    ]
    for cmd in cmds:
        outs = [
            subprocess.run([sys.executable, "-m", "oddquant", *cmd], capture_output=True, check=True).stdout
            for _ in range(2)
        ]
        assert outs[0] == outs[1] and outs[0]

import random

import pytest

from synfuzz.channel import Rng, gen_burst_1d
from synfuzz.cli import main, parse_model
from synfuzz.codespec import parse_spec
from synfuzz.errors import SynfuzzError


def run(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def write_word(path, symbols):
    path.write_text(" ".join(f"{v:x}" for v in symbols) + "\n", encoding="ascii")


def write_grid(path, grid):
    path.write_text(
        "".join(" ".join(f"{v:x}" for v in row) + "\n" for row in grid),
        encoding="ascii",
    )


def test_enroll_zero_data(tmp_path, capsys):
    data = tmp_path / "x.txt"
    tpl = tmp_path / "x.sfh"
    write_word(data, [0] * 21)
    rc, out, _ = run(capsys, "enroll", "--code", "cI(rs(7,3;gf(2^3)))",
                     "--in", str(data), "--out", str(tpl))
    assert rc == 0
    assert "rate: 9/21" in out
    text = tpl.read_text(encoding="ascii")
    assert text.startswith("sfh1\ncode=cI(rs(7,3;gf(2^3)))\n")
    synd_line = [l for l in text.splitlines() if l.startswith("syndrome=")][0]
    assert set(synd_line[len("syndrome="):]) == {"0"}


def test_enroll_is_byte_deterministic(tmp_path, capsys):
    data = tmp_path / "x.txt"
    write_word(data, [random.Random(5).randrange(2) for _ in range(21)])
    t1, t2 = tmp_path / "a.sfh", tmp_path / "b.sfh"
    assert run(capsys, "enroll", "--code", "cI(rs(7,3;gf(2^3)))",
               "--in", str(data), "--out", str(t1))[0] == 0
    assert run(capsys, "enroll", "--code", "cI(rs(7,3;gf(2^3)))",
               "--in", str(data), "--out", str(t2))[0] == 0
    assert t1.read_bytes() == t2.read_bytes()


def test_enroll_malformed_hex(tmp_path, capsys):
    data = tmp_path / "bad.txt"
    data.write_text("0 1 zz 0\n", encoding="ascii")
    rc, _, err = run(capsys, "enroll", "--code", "cI(rs(7,3;gf(2^3)))",
                     "--in", str(data), "--out", str(tmp_path / "t.sfh"))
    assert rc == 2
    assert "error:" in err


def test_enroll_wrong_shape(tmp_path, capsys):
    data = tmp_path / "short.txt"
    write_word(data, [0] * 20)
    rc, _, err = run(capsys, "enroll", "--code", "cI(rs(7,3;gf(2^3)))",
                     "--in", str(data), "--out", str(tmp_path / "t.sfh"))
    assert rc == 2


def test_verify_accepts_same_file(tmp_path, capsys):
    data = tmp_path / "x.txt"
    tpl = tmp_path / "x.sfh"
    write_word(data, [random.Random(6).randrange(2) for _ in range(21)])
    run(capsys, "enroll", "--code", "cI(rs(7,3;gf(2^3)))", "--in", str(data),
        "--out", str(tpl))
    rc, out, _ = run(capsys, "verify", "--template", str(tpl), "--in", str(data))
    assert rc == 0 and "ACCEPT" in out


def test_verify_accepts_in_capability_burst(tmp_path, capsys):
    code = parse_spec("cI(rs(7,3;gf(2^3)))")
    x = [random.Random(7).randrange(2) for _ in range(21)]
    data, noisy, tpl = tmp_path / "x.txt", tmp_path / "y.txt", tmp_path / "x.sfh"
    write_word(data, x)
    run(capsys, "enroll", "--code", "cI(rs(7,3;gf(2^3)))", "--in", str(data),
        "--out", str(tpl))
    pat = gen_burst_1d(Rng(8), code.rs.field.prime, 21, 4, 9)
    write_word(noisy, pat.apply_to(x))
    rec = tmp_path / "rec.txt"
    rc, out, _ = run(capsys, "verify", "--template", str(tpl), "--in", str(noisy),
                     "--recovered-out", str(rec))
    assert rc == 0 and "ACCEPT" in out
    assert rec.read_text(encoding="ascii").split() == [f"{v:x}" for v in x]


def test_verify_rejects_gross_corruption(tmp_path, capsys):
    x = [random.Random(9).randrange(2) for _ in range(21)]
    y = [random.Random(10).randrange(2) for _ in range(21)]
    data, other, tpl = tmp_path / "x.txt", tmp_path / "y.txt", tmp_path / "x.sfh"
    write_word(data, x)
    write_word(other, y)
    run(capsys, "enroll", "--code", "cI(rs(7,3;gf(2^3)))", "--in", str(data),
        "--out", str(tpl))
    rc, out, _ = run(capsys, "verify", "--template", str(tpl), "--in", str(other))
    assert rc == 1 and out.startswith("REJECT(")


def test_verify_truncated_template(tmp_path, capsys):
    data = tmp_path / "x.txt"
    write_word(data, [0] * 21)
    tpl = tmp_path / "broken.sfh"
    tpl.write_text("sfh1\ncode=cI(rs(7,3;gf(2^3)))\nhash=sha-256\n", encoding="ascii")
    rc, _, err = run(capsys, "verify", "--template", str(tpl), "--in", str(data))
    assert rc == 2


def test_capability_report_c1(capsys):
    rc, out, _ = run(capsys, "capability", "--code", "cI(rs(7,3;gf(2^3)))")
    assert rc == 0
    assert "single 1D burst: length <= 4" in out
    assert "2 bursts: length <= 1" in out
    assert "guidance:" in out


def test_capability_report_c2(capsys):
    rc, out, _ = run(capsys, "capability", "--code", "cII(rs(15,7;gf(2^4));3,5)")
    assert rc == 0
    assert "single square burst: side <= 3 (area 9)" in out


def test_capability_report_concat_flat(capsys):
    rc, out, _ = run(
        capsys, "capability", "--code",
        "concat(inner=bch(15,2;gf(2)), outer=rs(127,109;gf(2^7)), layout=flat)",
    )
    assert rc == 0
    assert "length <= 124" in out
    assert "bound 125 is not guaranteed" in out


def test_info_command(capsys):
    rc, out, _ = run(capsys, "info", "--code", "cIII(rs(15,5;gf(2^4));3,5)")
    assert rc == 0
    assert "companion-array" in out
    assert "base shape: 12x20" in out


def test_bad_spec_exits_2(capsys):
    rc, _, err = run(capsys, "capability", "--code", "zzz(1)")
    assert rc == 2 and "error:" in err


def test_parse_model():
    assert parse_model("bursts=2x5;random=3") == ([5, 5], 3)
    assert parse_model("bursts=1x4,7;random=0") == ([4, 7], 0)
    assert parse_model("random=2") == ([], 2)
    with pytest.raises(SynfuzzError):
        parse_model("noise=9")


def test_simulate_in_capability_accepts_everything(capsys):
    rc, out, _ = run(capsys, "simulate", "--code", "cI(rs(7,3;gf(2^3)))",
                     "--model", "bursts=1x4", "--trials", "40", "--seed", "11")
    assert rc == 0
    assert "accept_rate: 1.0000" in out


def test_simulate_zero_error_model(capsys):
    rc, out, _ = run(capsys, "simulate", "--code", "cII(rs(15,7;gf(2^4));3,5)",
                     "--model", "random=0", "--trials", "10", "--seed", "3")
    assert rc == 0
    assert "accept_rate: 1.0000" in out


def test_simulate_gross_corruption_rejects(capsys):
    rc, out, _ = run(capsys, "simulate", "--code", "cI(rs(7,3;gf(2^3)))",
                     "--model", "bursts=1x18;random=3", "--trials", "40",
                     "--seed", "12")
    assert rc == 0
    assert "accept_rate: 0.0000" in out


def test_simulate_reproducible(capsys):
    argv = ["simulate", "--code", "cI(rs(15,7;gf(2^4)))", "--model",
            "bursts=2x3;random=1", "--trials", "25", "--seed", "99"]
    rc1, out1, _ = run(capsys, *argv)
    rc2, out2, _ = run(capsys, *argv)
    assert rc1 == rc2 == 0
    assert out1 == out2


def test_usage_error_exit_code(capsys):
    assert main(["enroll", "--code", "cI(rs(7,3;gf(2^3)))"]) == 2

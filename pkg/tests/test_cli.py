import json

import pytest

from lmpe.cli import main

EX1 = {"variant": "remainder", "k": 12, "l": 1, "t": 1, "q": 27, "r": 2}


@pytest.fixture
def spec_file(tmp_path):
    p = tmp_path / "ex1.json"
    p.write_text(json.dumps(EX1))
    return str(p)


def run(capsys, argv):
    rc = main(argv)
    return rc, capsys.readouterr().out


def test_build(spec_file, capsys):
    rc, out = run(capsys, ["build", "--spec", spec_file])
    assert rc == 0
    rep = json.loads(out)
    assert (rep["n"], rep["m"]) == (28, 26)
    assert rep["rate"] == pytest.approx(0.9554, abs=1e-3)


def test_encode_decode_roundtrip(spec_file, tmp_path, capsys):
    msg = ";".join(["3,3,3,3"] * 26)
    msg_file = tmp_path / "msg.txt"
    msg_file.write_text(msg + "\n")
    rc, out = run(capsys, ["encode", "--spec", spec_file,
                           "--in", str(msg_file), "--quotients", "0,0"])
    assert rc == 0
    cw_line = out.strip()
    assert cw_line.count(";") == 27

    rec_file = tmp_path / "recv.txt"
    symbols = cw_line.split(";")
    symbols[2] = "2,4,3,3"  # single LMPE
    rec_file.write_text(";".join(symbols) + "\n")
    rc, out = run(capsys, ["decode", "--spec", spec_file, "--in", str(rec_file)])
    assert rc == 0
    assert out.split(" #")[0].strip() == msg


def test_simulate_deterministic(spec_file, capsys):
    argv = ["simulate", "--spec", spec_file, "--trials", "20", "--seed", "9"]
    rc1, out1 = run(capsys, argv)
    rc2, out2 = run(capsys, argv)
    assert rc1 == rc2 == 0
    assert out1 == out2
    rep = json.loads(out1)
    assert rep["decode_success"] == 20


def test_bounds_csv(capsys):
    rc, out = run(capsys, ["bounds", "--n", "1023", "--k", "100",
                           "--t", "1..15", "--l", "10", "--csv"])
    assert rc == 0
    lines = out.strip().splitlines()
    assert lines[0] == "t,spb_rate,gvb_rate"
    assert len(lines) == 16
    for line in lines[1:]:
        t, spb, gvb = line.split(",")
        assert float(spb) >= float(gvb)


def test_search_gray_and_critical(capsys):
    rc, out = run(capsys, ["search-gray", "--k", "8", "--l", "1",
                           "--q", "3", "--g", "1", "--policy", "canonical"])
    assert rc == 0
    assert out.count("->") == 3

    rc, out = run(capsys, ["search-critical", "--l", "1"])
    assert rc == 0
    assert "1,1,1,0" in out.splitlines()

    rc, out = run(capsys, ["search-critical", "--l", "5"])
    assert rc == 0
    assert out.strip() == ""


def test_tables(capsys):
    rc, out = run(capsys, ["tables", "--what", "class-map", "--l", "1",
                           "--k", "12", "--q", "27"])
    assert rc == 0
    assert out.splitlines()[0] == "0,0,0,0 -> 0"

    rc, out = run(capsys, ["tables", "--what", "error-patterns", "--l", "1"])
    assert rc == 0
    assert len(out.strip().splitlines()) == 12

    rc, out = run(capsys, ["tables", "--what", "reduced", "--l", "1",
                           "--k", "12"])
    assert rc == 0
    assert len(out.strip().splitlines()) == 9


def test_exit_codes(spec_file, tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("1,1,1\n")
    assert main(["decode", "--spec", spec_file, "--in", str(bad)]) == 3
    capsys.readouterr()
    assert main(["build", "--spec", str(tmp_path / "missing.json")]) == 3
    assert main(["no-such-command"]) == 2
    assert main(["build"]) == 2

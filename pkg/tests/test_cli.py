import pytest

from g2heights.cli import main


def write(tmp_path, name, text):
    f = tmp_path / name
    f.write_text(text)
    return str(f)


@pytest.fixture()
def curve56(tmp_path):
    return write(tmp_path, "curve.txt", "b = -2, 1, 0, 0, 1\n")


def run(capsys, argv):
    code = main(argv)
    return code, capsys.readouterr().out


def test_partition_check(capsys):
    code, out = run(capsys, ["partition-check", "--max", "41"])
    assert code == 0
    assert "no valid partition" in out
    code, out = run(capsys, ["partition-check", "--max", "40"])
    assert code == 0
    assert "valid partition exists" in out


def test_expand_emits_all_series(capsys, curve56):
    code, out = run(capsys, ["expand", "--curve", curve56, "--degree", "5"])
    assert code == 0
    for key in ("X11", "X222", "L1", "L2", "E1", "E2", "F1", "F2"):
        assert "%s = " % key in out


def test_sigma_naive(capsys, curve56):
    code, out = run(capsys, ["sigma", "--curve", curve56, "--degree", "5",
                             "--mode", "naive"])
    assert code == 0
    assert out.startswith("sigma = 1*T1")


def test_frobenius(capsys, curve56):
    code, out = run(capsys, ["frobenius", "--curve", curve56, "--prime", "11",
                             "--prec", "3"])
    assert code == 0
    assert "ordinary = True" in out
    assert "charpoly = t^4" in out
    assert "b11 = " in out


def test_neron_away_place(capsys, tmp_path, curve56):
    pt = write(tmp_path, "pt.txt", "p1 = 0, -1\np2 = 1, 1\n")
    code, out = run(capsys, ["neron", "--curve", curve56, "--point", pt,
                             "--prime", "11", "--place", "2"])
    assert code == 0
    assert "rational_multiplier = -7/6" in out


def test_divpoly(capsys, tmp_path):
    curve = write(tmp_path, "c.txt", "b = 0, 0, 0, 0, -1\n")
    pt = write(tmp_path, "pt.txt", "u = 2, 2, 1\nv = -1, 1\n")
    code, out = run(capsys, ["divpoly", "--curve", curve, "--point", pt,
                             "--n", "2"])
    assert code == 0
    assert "phi_2 = -30" in out


def test_integrate(capsys, tmp_path, curve56):
    a = write(tmp_path, "a.txt", "x = 0\ny = 1\n")
    b = write(tmp_path, "b.txt", "x = 1\ny = -1\n")
    code, out = run(capsys, ["integrate", "--curve", curve56, "--from", a,
                             "--to", b, "--omega", "1", "--prime", "11",
                             "--prec", "5"])
    assert code == 0
    assert out.startswith("integral_omega1 = ")


def test_golden_compare(capsys, tmp_path):
    gold = tmp_path / "gold.txt"
    code, out = run(capsys, ["partition-check", "--max", "41"])
    gold.write_text(out)
    code, _ = run(capsys, ["--golden", str(gold), "partition-check",
                           "--max", "41"])
    assert code == 0
    code, _ = run(capsys, ["--golden", str(gold), "partition-check",
                           "--max", "40"])
    assert code == 4


def test_domain_errors_exit_2(capsys, tmp_path, curve56):
    missing = str(tmp_path / "missing.txt")
    code, _ = run(capsys, ["neron", "--curve", curve56, "--point", missing,
                           "--prime", "11", "--place", "2"])
    assert code == 2
    bad = write(tmp_path, "bad.txt", "b = 0, 0, 0, 0, 0\n")
    code, _ = run(capsys, ["sigma", "--curve", bad, "--degree", "5"])
    assert code == 2
    off = write(tmp_path, "off.txt", "x = 2\ny = 2\n")
    code, _ = run(capsys, ["integrate", "--curve", curve56, "--from", off,
                           "--to", off, "--omega", "1", "--prime", "11",
                           "--prec", "5"])
    assert code == 2

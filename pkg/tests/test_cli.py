import pytest

from fibcat.cli import (
    EXIT_BAD_K,
    EXIT_CAP,
    EXIT_MISMATCH,
    EXIT_OK,
    EXIT_UNKNOWN_CLASS,
    EXIT_USAGE,
    parse_basis,
    run,
)
from fibcat.errors import InvalidInput


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def column(out, name):
    rows = [line.split("\t") for line in out.splitlines() if not line.startswith("#")]
    idx = rows[0].index(name)
    return [int(r[idx]) for r in rows[1:]]


def test_count_pell(capsys):
    code, out, _ = call(capsys, "count", "--class", "PELL", "--n", "6", "--method", "eco")
    assert code == EXIT_OK
    assert out.splitlines()[0] == "n\teco"
    assert column(out, "eco") == [1, 1, 2, 5, 12, 29, 70]


def test_count_catalan_zero(capsys):
    code, out, _ = call(capsys, "count", "--class", "CATALAN", "--n", "0")
    assert code == EXIT_OK and out == "n\teco\n0\t1\n"


def test_count_raw_basis(capsys):
    code, out, _ = call(capsys, "count", "--basis", "123,213,1432", "--n", "6")
    assert column(out, "eco") == [1, 1, 2, 4, 7, 13, 24]


def test_count_all_methods(capsys):
    code, out, _ = call(capsys, "count", "--class", "GFIB", "--k", "3", "--n", "7", "--method", "all")
    assert out.splitlines()[0] == "n\teco\tbrute\trule\tmatrix\tgf"
    assert len({tuple(column(out, m)) for m in ("eco", "brute", "rule", "matrix", "gf")}) == 1


def test_count_csv_and_out_file(tmp_path, capsys):
    dest = tmp_path / "counts.csv"
    code, out, _ = call(capsys, "count", "--class", "FIB", "--n", "3", "--format", "csv", "--out", str(dest))
    assert code == EXIT_OK and out == ""
    assert dest.read_text() == "n,eco\n0,1\n1,1\n2,2\n3,3\n"


def test_exit_codes(capsys):
    assert call(capsys, "count", "--class", "NOPE")[0] == EXIT_UNKNOWN_CLASS
    assert call(capsys, "count", "--class", "EVF1", "--k", "2")[0] == EXIT_BAD_K
    assert call(capsys, "count", "--class", "GFIB")[0] == EXIT_BAD_K
    assert call(capsys, "count", "--class", "CATALAN", "--n", "10", "--method", "brute")[0] == EXIT_CAP
    assert call(capsys, "count", "--class", "CATALAN", "--n", "9", "--node-cap", "50")[0] == EXIT_CAP
    assert call(capsys, "count", "--basis", "1234567890")[0] == EXIT_USAGE
    assert call(capsys, "count", "--basis", "12,ab")[0] == EXIT_USAGE
    assert call(capsys, "count")[0] == EXIT_USAGE
    assert call(capsys, "count", "--basis", "123", "--method", "rule")[0] == EXIT_USAGE
    code, _, err = call(capsys, "count", "--class", "NOPE")
    assert "unknown class" in err
    with pytest.raises(SystemExit) as info:
        run(["frobnicate"])
    assert info.value.code == EXIT_USAGE


def test_factorial_cap_env(monkeypatch, capsys):
    monkeypatch.setenv("FIBCAT_FACTORIAL_CAP", "5")
    assert call(capsys, "count", "--class", "FIB", "--n", "6", "--method", "brute")[0] == EXIT_CAP
    assert call(capsys, "count", "--class", "FIB", "--n", "6", "--method", "brute", "--factorial-cap", "6")[0] == EXIT_OK


def test_verify_gfib4(capsys):
    code, out, _ = call(capsys, "verify", "--class", "GFIB", "--k", "4", "--n", "8")
    assert code == EXIT_OK
    assert "# result: all methods agree" in out
    assert column(out, "gf") == [1, 1, 2, 4, 8, 15, 29, 56, 108]


def test_verify_pell_routes(capsys):
    _, evf1, _ = call(capsys, "verify", "--class", "EVF1", "--k", "3", "--n", "8")
    _, direct, _ = call(capsys, "verify", "--class", "DIRECT", "--k", "3", "--n", "8")
    assert column(evf1, "eco") == column(direct, "eco") == [1, 1, 2, 5, 12, 29, 70, 169, 408]


def test_verify_cat1_is_even_fibonacci(capsys):
    code, out, _ = call(capsys, "verify", "--class", "CAT1", "--k", "3", "--n", "8")
    assert code == EXIT_OK
    assert column(out, "rule") == [1, 1, 2, 5, 13, 34, 89, 233, 610]


def test_verify_brute_stops_at_cap(capsys):
    code, out, _ = call(capsys, "verify", "--class", "FIB", "--n", "7", "--factorial-cap", "5")
    assert code == EXIT_OK
    rows = [line.split("\t") for line in out.splitlines() if not line.startswith("#")]
    assert rows[-1][2] == "-"


def test_verify_mismatch_exit(monkeypatch, capsys):
    from fibcat import crosscheck

    real = crosscheck.count_by

    def skewed(method, *args, **kw):
        out = real(method, *args, **kw)
        return out[:-1] + [out[-1] + 1] if method == "gf" else out

    monkeypatch.setattr(crosscheck, "count_by", skewed)
    code, out, _ = call(capsys, "verify", "--class", "FIB", "--n", "5")
    assert code == EXIT_MISMATCH
    assert "NO" in out.splitlines()[-3] and "MISMATCH" in out


def test_series(capsys):
    code, out, _ = call(capsys, "series", "--gf", "tk", "--k", "3", "--terms", "7")
    assert code == EXIT_OK
    assert out.splitlines()[0] == "# gf: (1 - x)/(1 - 2*x + x^4)"
    assert column(out, "coefficient") == [1, 1, 2, 4, 7, 13, 24]
    _, out, _ = call(capsys, "series", "--gf", "fbark", "--k", "3", "--terms", "7")
    assert column(out, "coefficient") == [1, 1, 2, 5, 12, 29, 70]
    _, out, _ = call(capsys, "series", "--gf", "convergentP", "--k", "5", "--terms", "10")
    coeffs = column(out, "coefficient")
    assert coeffs[:6] == [1, 1, 2, 5, 14, 42] and coeffs[6] != 132
    _, out, _ = call(capsys, "series", "--gf", "catalan", "--terms", "4")
    assert column(out, "coefficient") == [1, 1, 2, 5]


def test_table(capsys):
    code, out, _ = call(capsys, "table")
    assert code == EXIT_OK
    rows = {(r[0], r[1]): r for r in (line.split("\t") for line in out.splitlines()[1:])}
    assert rows[("FIB", "")][4] == "1,1,2,3,5,8,13,21"
    assert rows[("POW2", "")][4] == "1,1,2,4,8,16,32,64"
    assert rows[("CATALAN", "")][4] == "1,1,2,5,14,42,132,429"
    assert rows[("GFIB", "3")][2] == "123,213,1432"


def test_enumerate(capsys):
    code, out, _ = call(capsys, "enumerate", "--class", "FIB", "--n", "3")
    assert out.splitlines() == [
        "n\tpermutation\tactive_sites", "0\te\t1", "1\t1\t2", "2\t12\t1", "2\t21\t2",
        "3\t231\t1", "3\t312\t2", "3\t321\t2",
    ]


def test_show_rule(capsys):
    code, out, _ = call(capsys, "show-rule", "--rule", "cat1", "--k", "3", "--matrix")
    assert code == EXIT_OK
    assert out.startswith("(1)\n(1) ~> (2)\n(2) ~> (2)(3)\n(3) ~> (2)(3)(3)\n")
    assert "(3)   0   1   2" in out
    code, out, _ = call(capsys, "show-rule", "--rule", "rscat", "--matrix", "--size", "5")
    assert "(h) ~> (2)(3)...(h)(h+1)" in out and "exact up to level 3" in out
    assert call(capsys, "show-rule", "--rule", "omega")[0] == EXIT_BAD_K


def test_output_is_deterministic(capsys):
    argv = ["verify", "--class", "EVF2", "--k", "4", "--n", "7"]
    assert call(capsys, *argv) == call(capsys, *argv)


def test_parse_basis():
    assert parse_basis("123, 213") == ((1, 2, 3), (2, 1, 3))
    with pytest.raises(InvalidInput):
        parse_basis("")
    with pytest.raises(InvalidInput):
        parse_basis("1203")

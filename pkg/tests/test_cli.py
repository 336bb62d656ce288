import json
import random
from fractions import Fraction
from pathlib import Path

import pytest

from tropbasis import BOTTOM as B
from tropbasis import TwoRowSystem
from tropbasis.cli import main
from tropbasis.fileio import ParseError, RowLengthMismatch, parse_system, parse_vectors, render_system
from tropbasis.oracle import random_system

DATA = Path(__file__).resolve().parent.parent / "data"
EX1 = str(DATA / "example1.sys")
EX2 = str(DATA / "example2.sys")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_example1(ex1):
    assert parse_system((DATA / "example1.sys").read_text()) == ex1
    text = "-inf -inf 4 2\n3 -inf 0 -inf\n0 2 -inf -inf\n-inf 0 -inf -inf\n"
    assert parse_system(text) == ex1


def test_round_trip():
    rng = random.Random(2)
    for _ in range(200):
        s = random_system(rng.randint(1, 6), rng)
        assert parse_system(render_system(s)) == s
    s = TwoRowSystem.from_rows((Fraction(1, 3), B), (0, -2), (Fraction(-7, 2), 1), (B, B))
    assert parse_system(render_system(s)) == s


def test_parse_fraction_and_comments():
    s = parse_system("# header\n1/2 -inf # trailing\n\n0 0\n4/2 0\n0 -3/4\n")
    assert s.A[0] == (Fraction(1, 2), B)
    assert s.B[0][0] == 2 and type(s.B[0][0]) is int


@pytest.mark.parametrize("text", ["", "# only a comment\n", "0\n0\n0\n", "0\n0\n0\n0\n0\n"])
def test_parse_wrong_row_count(text):
    with pytest.raises(ParseError):
        parse_system(text)


def test_parse_row_length_mismatch():
    with pytest.raises(RowLengthMismatch) as info:
        parse_system("0 0 0 0\n0 0 0 0\n0 0 0 0\n0 0 0\n")
    assert info.value.line == 4


@pytest.mark.parametrize("tok", ["1.5", "inf", "x", "1/0", "--1", "nan"])
def test_parse_bad_token(tok):
    with pytest.raises(ParseError) as info:
        parse_system(f"0 0\n0 {tok}\n0 0\n0 0\n")
    assert (info.value.line, info.value.column) == (2, 3)


def test_solve_example1(capsys):
    code, out, _ = run(capsys, "solve", EX1)
    lines = out.splitlines()
    assert code == 0
    assert lines[-1] == "basis size: 4"
    assert "class=S2A2 i=1 k=- l=2 vec=-3 0 -inf -inf" in lines
    assert all(line.startswith("class=") for line in lines[:-1])


def test_solve_json(capsys):
    code, out, _ = run(capsys, "solve", "--format", "json", EX2)
    doc = json.loads(out)
    assert code == 0 and doc["basis_size"] == 16 == len(doc["generators"])
    assert {"class", "i", "k", "l", "vec"} == set(doc["generators"][0])


def test_solve_is_deterministic(capsys):
    first = run(capsys, "solve", EX2)
    assert all(run(capsys, "solve", EX2) == first for _ in range(3))


def test_oracle_example2(capsys):
    code, out, _ = run(capsys, "oracle", EX2)
    assert code == 0
    assert "basis_match: true" in out.splitlines()
    assert "oracle basis size: 16" in out
    code, out, _ = run(capsys, "oracle", "--format", "json", EX1)
    assert code == 0 and json.loads(out)["basis_match"] is True


@pytest.mark.parametrize("fmt", ["text", "json"])
def test_verify_self_consistency(capsys, tmp_path, fmt):
    for path in (EX1, EX2):
        _, out, _ = run(capsys, "solve", "--format", fmt, path)
        basis = tmp_path / "basis.txt"
        basis.write_text(out)
        code, out, _ = run(capsys, "verify", path, str(basis))
        assert code == 0 and "verified: true" in out


def test_verify_failures(capsys, tmp_path):
    _, out, _ = run(capsys, "solve", EX2)
    lines = out.splitlines()[:-1]
    basis = tmp_path / "basis.txt"

    basis.write_text("\n".join(lines[1:]))
    code, out, _ = run(capsys, "verify", EX2, str(basis))
    assert code == 1 and "generating: 1 extremals not generated" in out

    # e2 + 2e3 + 1e6 is not a solution
    basis.write_text("\n".join(lines + ["-inf 0 2 -inf -inf 1 -inf"]))
    code, out, _ = run(capsys, "verify", EX2, str(basis))
    assert code == 1 and "solutions: 1 violate the system" in out

    basis.write_text("\n".join(lines + ["-inf -inf 0 -inf -inf 2 -inf"]))
    code, out, _ = run(capsys, "verify", EX2, str(basis))
    assert code == 1 and "generated by the others" in out


def test_bench(capsys):
    code, out, _ = run(capsys, "bench", "--n", "20", "--seed", "3")
    assert code == 0
    fields = dict(kv.split("=") for kv in out.split())
    assert fields["n"] == "20" and int(fields["basis"]) > 0
    code, out, _ = run(capsys, "bench", "--n", "20", "--seed", "3", "--format", "json")
    assert json.loads(out)["basis"] == int(fields["basis"])


def test_usage_errors(capsys, tmp_path):
    code, _, err = run(capsys, "solve")
    assert code == 2 and "usage" in err
    assert run(capsys)[0] == 2
    assert run(capsys, "bench", "--n", "0")[0] == 2
    assert run(capsys, "solve", str(tmp_path / "missing.sys"))[0] == 2
    bad = tmp_path / "bad.sys"
    bad.write_text("0 0\n0 0\n0 0\n0\n")
    code, _, err = run(capsys, "solve", str(bad))
    assert code == 2 and "line 4" in err


def test_parse_vectors_formats():
    assert parse_vectors("class=S1 i=2 k=- l=- vec=-inf 0\nbasis size: 1\n", 2) == [(B, 0)]
    assert parse_vectors('{"generators": [{"vec": ["1/2", "-inf"]}]}', 2) == [(Fraction(1, 2), B)]
    assert parse_vectors("# plain\n0 -1\n", 2) == [(0, -1)]
    with pytest.raises(RowLengthMismatch):
        parse_vectors("0 0 0\n", 2)
    with pytest.raises(ParseError):
        parse_vectors("{not json", 2)

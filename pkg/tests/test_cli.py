"""CLI behavior: report lines, exit codes, file format."""
import json
from fractions import Fraction
from pathlib import Path

import pytest

from lapvol import cli

REPO = Path(__file__).resolve().parent.parent
INSTANCES = REPO / "instances"


def write(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- decimal rendering ----------------------------------------------------


@pytest.mark.parametrize(
    "value,digits,expected",
    [
        (Fraction(17, 48), 12, "0.354166666667"),
        (Fraction(17, 48), 4, "0.3542"),
        (Fraction(1, 2), 3, "0.500"),
        (Fraction(-1, 3), 5, "-0.33333"),
        (Fraction(7), 2, "7.00"),
        (Fraction(999, 1000), 2, "1.00"),
        (Fraction(5, 2), 0, "3"),  # rounds half up at the boundary
    ],
)
def test_decimal_string(value, digits, expected):
    assert cli.decimal_string(value, digits) == expected


# -- volume command --------------------------------------------------------


def test_volume_paper_example(capsys):
    code, out, _ = run(capsys, "volume", str(INSTANCES / "paper-example.json"))
    assert code == 0
    assert out.splitlines()[0] == "17/48 (0.354166666667)"
    assert "methods agree" in out


def test_volume_single_value_line(capsys):
    code, out, _ = run(capsys, "volume", str(INSTANCES / "paper-example.json"),
                       "--method", "direct", "--digits", "4")
    assert code == 0
    assert out.splitlines()[0] == "17/48 (0.3542)"


def test_volume_simplex(capsys):
    code, out, _ = run(capsys, "volume", str(INSTANCES / "simplex3.json"))
    assert code == 0
    assert out.startswith("1/6 (0.1666")


def test_stats_lines(capsys):
    code, out, _ = run(capsys, "volume", str(INSTANCES / "paper-example.json"), "--stats")
    assert code == 0
    assert "stats: method=direct level=1" in out
    assert "stats: transform C=17/24" in out


def test_verify_mc_line(capsys):
    code, out, _ = run(
        capsys, "volume", str(INSTANCES / "paper-example.json"),
        "--verify-mc", "--samples", "50000", "--seed", "3",
    )
    assert code == 0
    mc_lines = [l for l in out.splitlines() if l.startswith("mc:")]
    assert len(mc_lines) == 1
    assert "seed=3" in mc_lines[0] and "stderr=" in mc_lines[0]


# -- exit codes --------------------------------------------------------------


def test_exit_2_missing_file(capsys):
    code, _, err = run(capsys, "volume", "/nonexistent/x.json")
    assert code == 2 and "error:" in err


def test_exit_2_bad_json(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    code, _, err = run(capsys, "volume", str(path))
    assert code == 2


def test_exit_2_missing_keys(tmp_path, capsys):
    code, _, _ = run(capsys, "volume", write(tmp_path, "x.json", {"A": [["1"]]}))
    assert code == 2


def test_exit_2_float_literal(tmp_path, capsys):
    path = write(tmp_path, "f.json", {"A": [["0.1", "1"]], "b": ["1"]})
    code, _, err = run(capsys, "volume", path)
    assert code == 2
    assert "exact" in err


def test_tolerate_floats_converts_exactly(tmp_path, capsys):
    doc = {"A": [[0.5, "1"], ["1", "3"]], "b": ["1", "1"]}
    path = write(tmp_path, "f.json", doc)
    code, out, err = run(capsys, "volume", path, "--tolerate-floats", "--method", "direct")
    assert code == 0
    assert "warning" in err
    # 0.5 became exactly 1/2; the first row is then redundant and the body
    # is the triangle {x >= 0, x1 + 3 x2 <= 1} of area 1/6
    assert out.splitlines()[0].split()[0] == "1/6"


def test_exit_3_nonpositive_b(tmp_path, capsys):
    path = write(tmp_path, "b0.json", {"A": [["1", "1"]], "b": ["0"]})
    code, _, err = run(capsys, "volume", path)
    assert code == 3


def test_exit_4_unbounded(capsys):
    code, _, err = run(capsys, "volume", str(INSTANCES / "unbounded.json"))
    assert code == 4
    assert "unbounded" in err


def test_exit_5_nonpointed_check_only(capsys):
    code, out, _ = run(capsys, "volume", str(INSTANCES / "nonpointed.json"), "--check-only")
    assert code == 5
    assert "pointed: false" in out
    assert "valid: false" in out


def test_exit_6_degenerate_box(tmp_path, capsys):
    path = write(tmp_path, "box.json", {"A": [["1", "0"], ["0", "1"]], "b": ["1", "1"]})
    code, _, err = run(capsys, "volume", path)
    assert code == 6
    assert "coincident" in err


def test_check_only_valid_instance(capsys):
    code, out, _ = run(capsys, "volume", str(INSTANCES / "paper-example.json"), "--check-only")
    assert code == 0
    assert "compact: true" in out
    assert "pointed: true" in out
    assert "valid: true" in out


# -- generators ---------------------------------------------------------------


def test_gen_round_trip(tmp_path, capsys):
    code, out, _ = run(capsys, "--gen", "simplex:4")
    assert code == 0
    path = tmp_path / "g.json"
    path.write_text(out)
    code, out2, _ = run(capsys, "volume", str(path))
    assert code == 0
    assert out2.splitlines()[0].split()[0] == "1/24"


def test_gen_paper_example_matches_fixture(capsys):
    code, out, _ = run(capsys, "--gen", "paper-example")
    assert code == 0
    assert json.loads(out) == json.loads((INSTANCES / "paper-example.json").read_text())


def test_gen_box(capsys):
    code, out, _ = run(capsys, "--gen", "box:2")
    assert code == 0
    assert json.loads(out)["A"] == [["1", "0"], ["0", "1"]]


def test_gen_unknown_kind(capsys):
    code, _, err = run(capsys, "--gen", "dodecahedron:3")
    assert code == 2


def test_no_command_prints_usage(capsys):
    code, _, err = run(capsys)
    assert code == 2

import json

import pytest

from epilat.cli import main


DIAMOND = """\
elements: 0 a b c 1
cover: 0 < a
cover: 0 < b
cover: 0 < c
cover: a < 1
cover: b < 1
cover: c < 1
"""

PENTAGON = """\
elements: 0 x a b 1
cover: 0 < x
cover: 0 < a
cover: a < b
cover: x < 1
cover: b < 1
"""


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_holds(capsys):
    code, out, _ = run(capsys, "check", "SL", "x y = y x")
    assert code == 0 and out.startswith("holds")


def test_check_fails_with_exit_one(capsys):
    code, out, _ = run(capsys, "check", "SL", "x y = x")
    assert code == 1 and out.startswith("fails")


def test_check_zero_identity(capsys):
    code, out, _ = run(capsys, "check", "Q", "x y x = 0")
    assert code == 0 and "holds" in out


def test_check_bad_variety_usage_error(capsys):
    code, _, err = run(capsys, "check", "NOPE", "x = y")
    assert code == 2 and "error" in err


def test_check_parse_error(capsys):
    code, _, err = run(capsys, "check", "SL", "x = (")
    assert code == 2


def test_lattice_props(tmp_path, capsys):
    f = tmp_path / "m3.lat"
    f.write_text(DIAMOND)
    code, out, _ = run(capsys, "lattice", "props", str(f))
    assert code == 0
    assert "modular: true" in out and "distributive: false" in out
    assert "M3 witness" in out


def test_lattice_profile(tmp_path, capsys):
    f = tmp_path / "n5.lat"
    f.write_text(PENTAGON)
    code, out, _ = run(capsys, "lattice", "profile", str(f), "x")
    assert code == 0
    assert "modular: false" in out and "witness" in out


def test_lattice_fo(tmp_path, capsys):
    lat = tmp_path / "n5.lat"
    lat.write_text(PENTAGON)
    phi = tmp_path / "mod.fo"
    phi.write_text("forall y. forall z. (y <= z -> "
                   "((x | y) ^ z) = ((x ^ z) | y))")
    code, out, _ = run(capsys, "lattice", "fo", str(lat), str(phi))
    assert code == 0 and "defined set:" in out
    assert "x" not in out.split("defined set:")[1].split()


def test_lattice_dot(tmp_path, capsys):
    f = tmp_path / "m3.lat"
    f.write_text(DIAMOND)
    code, out, _ = run(capsys, "lattice", "dot", str(f))
    assert code == 0 and out.startswith("digraph")


def test_semigroup_info(tmp_path, capsys):
    f = tmp_path / "null2.cay"
    f.write_text("z a\nz z\nz z\n")
    code, out, _ = run(capsys, "semigroup", "info", str(f))
    assert code == 0
    assert "order: 2" in out and "nil: true" in out


def test_li_build(capsys):
    code, out, _ = run(capsys, "li", "build", "4")
    assert code == 0
    assert "L(1)" in out and "cover:" in out


def test_li_build_dot(capsys):
    code, out, _ = run(capsys, "li", "build", "4", "--dot")
    assert code == 0 and out.startswith("digraph")


def test_sublattice_seeds(capsys):
    code, out, _ = run(capsys, "sublattice", "--seeds", "T,SL,ZM")
    assert code == 0 and "SL v ZM" in out


def test_sublattice_facts_file(tmp_path, capsys):
    facts = [{"variety": "LZ", "parts": ["RZ"], "leq": False}]
    f = tmp_path / "facts.json"
    f.write_text(json.dumps(facts))
    code, out, _ = run(capsys, "sublattice", "--seeds", "T,LZ,RZ",
                       "--facts", str(f))
    assert code == 0 and "LZ v RZ" in out


def test_deduce_verify_valid(tmp_path, capsys):
    f = tmp_path / "ded.txt"
    f.write_text("theories: K\nx x x t\nx x x\n")
    code, out, _ = run(capsys, "deduce", "verify", str(f))
    assert code == 0 and "valid deduction" in out
    assert "#step" in out


def test_deduce_verify_invalid(tmp_path, capsys):
    f = tmp_path / "ded.txt"
    f.write_text("theories: K\nx\ny\n")
    code, out, _ = run(capsys, "deduce", "verify", str(f))
    assert code == 1 and "invalid" in out


def test_suite_command(capsys):
    code, out, _ = run(capsys, "suite", "figure2", "--n-max", "5")
    assert code == 0 and "PASS" in out and "#suite" in out


def test_suite_rejects_wrong_flag(capsys):
    code, _, err = run(capsys, "suite", "figure2", "--max-length", "4")
    assert code == 2


def test_usage_error_exit_code(capsys):
    code, _, _ = run(capsys, "nonsense")
    assert code == 2

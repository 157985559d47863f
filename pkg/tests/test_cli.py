"""Command line front end, run in process (plus one subprocess check)."""

import json
import os
import subprocess
import sys

import pytest

from atlq import Morphism, WeightMap, extremal, gen_u, jones_wenzl, phi
from atlq.cli import load_operand, main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_load_operand_builtins():
    assert load_operand("u_4_0") == gen_u(4, 0)
    assert load_operand("t_2") == extremal(2)
    with pytest.raises(SystemExit):
        load_operand("nonsense_3")


def test_projector_json_zero_strands(capsys):
    code, out = run(capsys, "projector", "extremal", "0")
    assert code == 0
    obj = json.loads(out)
    assert obj["terms"][0]["coeff"] == "2"
    assert Morphism.from_json_obj(obj) == extremal(0)


def test_projector_matrix_output(capsys):
    code, out = run(capsys, "projector", "jw", "2", "--out", "matrix")
    assert code == 0
    assert WeightMap.from_json_obj(json.loads(out)) == phi(jones_wenzl(2))


def test_projector_svg_to_file(tmp_path, capsys):
    target = tmp_path / "pic.svg"
    code, out = run(capsys, "projector", "extremal", "2", "--out", "svg",
                    "--output", str(target))
    assert code == 0 and out == ""
    assert target.read_text().startswith('<?xml version="1.0"')


def test_eval_compose_and_eq_round_trip(tmp_path, capsys):
    square = tmp_path / "t3sq.json"
    code, _ = run(capsys, "eval", "t_3", "t_3", "compose",
                  "--output", str(square))
    assert code == 0
    code, out = run(capsys, "eval", str(square), "t_3", "eq")
    assert code == 0
    assert "syntactic: False" in out
    assert "essential: True" in out


def test_eval_eq_failure_exit_code(capsys):
    code, out = run(capsys, "eval", "id_2", "u_2_1", "eq")
    assert code == 1
    assert "essential: False" in out


def test_eval_unary_ops(capsys):
    code, out = run(capsys, "eval", "id_2", "ptrace")
    assert code == 0
    assert Morphism.from_json_obj(json.loads(out)).terms
    code, out = run(capsys, "eval", "u_2_1", "coords")
    obj = json.loads(out)
    assert obj["coords"] == ["0", "1", "0", "0", "0", "0"]
    assert len(obj["basis"]) == 6


def test_eval_rejects_bad_shapes(capsys):
    with pytest.raises(SystemExit):
        main(["eval", "id_2", "frobnicate"])
    with pytest.raises(SystemExit):
        main(["eval", "id_2", "id_2", "ptrace"])


def test_verify_suite_exit_and_lines(capsys):
    code, out = run(capsys, "verify", "chebyshev")
    assert code == 0
    lines = [l for l in out.splitlines() if l.strip()]
    assert lines and all(l.startswith("PASS") for l in lines)


def test_verify_faithfulness_reports_ranks(capsys):
    code, out = run(capsys, "verify", "faithfulness", "3")
    assert code == 0
    assert "rank 20 of 20" in out


def test_render_ascii(capsys):
    code, out = run(capsys, "render", "d_1", "--format", "ascii")
    assert code == 0 and out.strip()


def test_render_deterministic(capsys):
    _, first = run(capsys, "render", "t_2")
    _, second = run(capsys, "render", "t_2")
    assert first == second


def test_mode_flag(capsys):
    # an essential circle composed with itself survives only in raw mode
    code, out = run(capsys, "--mode", "raw", "eval", "ess_0", "ess_0", "compose")
    assert code == 0
    assert json.loads(out)["terms"][0]["diagram"]["ess"] == 2

    code, out = run(capsys, "--mode", "quotient", "eval", "ess_0", "ess_0", "compose")
    assert json.loads(out)["terms"] == []


def test_mode_flag_beats_environment():
    # the environment seeds the default, an explicit flag overrides it
    env = {**os.environ, "ATL_MODE": "quotient"}
    cmd = [sys.executable, "-m", "atlq.cli"]
    raw = subprocess.run(
        [*cmd, "--mode", "raw", "eval", "ess_0", "ess_0", "compose"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert json.loads(raw.stdout)["terms"][0]["diagram"]["ess"] == 2
    seeded = subprocess.run(
        [*cmd, "eval", "ess_0", "ess_0", "compose"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert json.loads(seeded.stdout)["terms"] == []


def test_max_strands_flag(capsys):
    with pytest.raises(ValueError):
        main(["--max-strands", "2", "eval", "id_3", "id_3", "compose"])

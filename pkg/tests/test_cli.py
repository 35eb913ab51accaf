"""Tests for the command-line interface and its file formats."""

import json
import math

import numpy as np
import pytest

from subspace_limits.cli import (
    EXIT_CONVERGES,
    EXIT_DOES_NOT_CONVERGE,
    TRACE_HEADER,
    ConfigError,
    ExperimentConfig,
    build_experiment,
    load_config,
    main,
    read_report,
    report_verdicts,
    rotating_family,
)


def write(path, text):
    path.write_text(text)
    return str(path)


# ---------------------------------------------------------------------------
# gap subcommand


def test_gap_identical_files(tmp_path, capsys):
    u = write(tmp_path / "u.txt", "1 0\n0 1\n")
    assert main(["gap", u, u]) == 0
    assert float(capsys.readouterr().out.strip()) == 0.0


def test_gap_orthogonal_lines(tmp_path, capsys):
    u = write(tmp_path / "u.txt", "1 0\n")
    v = write(tmp_path / "v.txt", "0 1\n")
    assert main(["gap", u, v]) == 0
    assert float(capsys.readouterr().out.strip()) == 1.0


def test_gap_diagonal_line_matches_closed_form(tmp_path, capsys):
    u = write(tmp_path / "u.txt", "1 0\n")
    v = write(tmp_path / "v.txt", "0.7071067811865476 0.7071067811865476\n")
    assert main(["gap", u, v]) == 0
    printed = float(capsys.readouterr().out.strip())
    assert printed == pytest.approx(math.sqrt(0.5), abs=1e-9)


def test_gap_accepts_comma_separated(tmp_path, capsys):
    u = write(tmp_path / "u.csv", "1,0,0\n0,1,0\n")
    v = write(tmp_path / "v.csv", "0,1,0\n0,0,1\n")
    assert main(["gap", u, v]) == 0
    out = float(capsys.readouterr().out.strip())
    assert out == pytest.approx(1.0, abs=1e-12)


def test_gap_shape_mismatch_is_an_error(tmp_path, capsys):
    u = write(tmp_path / "u.txt", "1 0\n")
    v = write(tmp_path / "v.txt", "1 0 0\n")
    assert main(["gap", u, v]) > 2
    assert "error" in capsys.readouterr().err


def test_gap_rank_deficient_is_an_error(tmp_path, capsys):
    u = write(tmp_path / "u.txt", "1 0\n2 0\n")
    v = write(tmp_path / "v.txt", "1 0\n0 1\n")
    assert main(["gap", u, v]) > 2
    assert "rank" in capsys.readouterr().err.lower()


def test_gap_missing_file_is_an_error(tmp_path, capsys):
    v = write(tmp_path / "v.txt", "1 0\n")
    assert main(["gap", str(tmp_path / "absent.txt"), v]) > 2


# ---------------------------------------------------------------------------
# analyze subcommand


def test_analyze_orthogonal_constant_density(tmp_path, capsys):
    code = main(
        [
            "analyze",
            "orthogonal-constant",
            "--ideal",
            "density",
            "--horizon",
            "1000",
            "--out-dir",
            str(tmp_path / "out"),
        ]
    )
    assert code == EXIT_DOES_NOT_CONVERGE
    doc = read_report(tmp_path / "out" / "report.json")
    assert doc["overall"] == "does_not_converge"
    assert doc["ideal"] == {"kind": "density", "tau": 0.01}
    trace = (tmp_path / "out" / "trace.csv").read_text().splitlines()
    assert trace[0] == TRACE_HEADER
    assert len(trace) == 1001
    assert trace[1].startswith("1,1,")


def test_analyze_parity_split_blocks(tmp_path):
    code = main(
        [
            "analyze",
            "parity-split",
            "--variant",
            "amended",
            "--ideal",
            "blocks",
            "--horizon",
            "2000",
            "--out-dir",
            str(tmp_path / "out"),
        ]
    )
    assert code == EXIT_CONVERGES
    doc = read_report(tmp_path / "out" / "report.json")
    assert doc["overall"] == "converges"
    rows = doc["criteria"][0]["per_vector"][0]["per_epsilon"]
    assert all(row["mode"] == "exact" for row in rows)


def test_analyze_defaults_to_recommended_ideal(tmp_path):
    code = main(
        ["analyze", "parity-split", "--horizon", "2000", "--out-dir", str(tmp_path / "o")]
    )
    assert code == EXIT_CONVERGES  # block ideal is the built-in default
    doc = read_report(tmp_path / "o" / "report.json")
    assert doc["ideal"]["kind"] == "blocks"


def test_analyze_constant_config(tmp_path):
    cfg = {
        "sequence": {
            "family": "rotating",
            "params": {
                "ambient_dim": 3,
                "k": 1,
                "seed": 5,
                "profile": {"kind": "constant", "value": 0.0},
            },
        },
        "ideal": {"kind": "finite"},
        "horizon": 200,
        "eps_grid": [0.5, 0.1, 0.01],
        "out_dir": str(tmp_path / "out"),
    }
    path = write(tmp_path / "config.json", json.dumps(cfg))
    assert main(["analyze", "--config", path]) == EXIT_CONVERGES


def test_analyze_variant_rejected_for_variantless_builtin(tmp_path, capsys):
    code = main(
        [
            "analyze",
            "orthogonal-constant",
            "--variant",
            "printed",
            "--out-dir",
            str(tmp_path / "o"),
        ]
    )
    assert code > 2
    assert "variant" in capsys.readouterr().err


def test_analyze_unknown_builtin(tmp_path, capsys):
    assert main(["analyze", "no-such-sequence"]) > 2
    assert "sequence.builtin" in capsys.readouterr().err


def test_analyze_malformed_config_names_field(tmp_path, capsys):
    cfg = {
        "sequence": {"builtin": "parity-split"},
        "ideal": {"kind": "blocks"},
        "horizon": 4,  # too small
        "eps_grid": [0.5, 0.1],
    }
    path = write(tmp_path / "config.json", json.dumps(cfg))
    assert main(["analyze", "--config", path]) > 2
    assert "config field 'horizon'" in capsys.readouterr().err


def test_analyze_increasing_eps_grid_rejected(tmp_path, capsys):
    cfg = {
        "sequence": {"builtin": "parity-split"},
        "ideal": {"kind": "blocks"},
        "horizon": 100,
        "eps_grid": [0.1, 0.5],
    }
    path = write(tmp_path / "config.json", json.dumps(cfg))
    assert main(["analyze", "--config", path]) > 2
    assert "eps_grid" in capsys.readouterr().err


def test_usage_error_exit_code_is_not_inconclusive(capsys):
    # argparse usage failures must not collide with the verdict exit codes
    assert main(["analyze", "--no-such-flag"]) == 3
    capsys.readouterr()


def test_verdict_exit_code_mapping():
    from subspace_limits import Verdict
    from subspace_limits.cli import _verdict_exit

    assert _verdict_exit(Verdict.CONVERGES) == 0
    assert _verdict_exit(Verdict.DOES_NOT_CONVERGE) == 1
    assert _verdict_exit(Verdict.INCONCLUSIVE) == 2


# ---------------------------------------------------------------------------
# suite subcommand


def test_suite_orthogonal_constant_agrees(tmp_path):
    code = main(
        [
            "suite",
            "orthogonal-constant",
            "--ideal",
            "density",
            "--horizon",
            "500",
            "--out-dir",
            str(tmp_path / "out"),
        ]
    )
    assert code == 0  # all five criteria agree (on does_not_converge)
    doc = read_report(tmp_path / "out" / "suite_report.json")
    assert doc["agreement"]["consistent"] is True
    assert set(doc["agreement"]["overall_by_criterion"].values()) == {
        "does_not_converge"
    }
    assert doc["volume_check"]["subspace_overall"] == "does_not_converge"
    assert doc["volume_check"]["volume"]["overall"] == "converges"
    assert doc["volume_check"]["converse_falsified"] is True
    assert doc["volume_check"]["implication_holds"] is True


def test_suite_parity_split_blocks_all_converge(tmp_path):
    code = main(
        [
            "suite",
            "parity-split",
            "--ideal",
            "blocks",
            "--horizon",
            "2000",
            "--out-dir",
            str(tmp_path / "out"),
        ]
    )
    assert code == 0
    doc = read_report(tmp_path / "out" / "suite_report.json")
    assert set(doc["agreement"]["overall_by_criterion"].values()) == {"converges"}
    matrix = doc["agreement"]["matrix"]
    assert all(all(cell for cell in row) for row in matrix)


# ---------------------------------------------------------------------------
# determinism and round-trips


def test_suite_runs_are_byte_identical(tmp_path):
    cfg = {
        "sequence": {"builtin": "parity-split", "variant": "amended"},
        "ideal": {"kind": "blocks"},
        "horizon": 500,
        "eps_grid": [0.5, 0.1, 0.01],
    }
    path = write(tmp_path / "config.json", json.dumps(cfg))
    assert main(["suite", "--config", path, "--out-dir", str(tmp_path / "a")]) == 0
    assert main(["suite", "--config", path, "--out-dir", str(tmp_path / "b")]) == 0
    for name in ("trace.csv", "suite_report.json"):
        a = (tmp_path / "a" / name).read_bytes()
        b = (tmp_path / "b" / name).read_bytes()
        assert a == b


def test_report_round_trip(tmp_path):
    out = tmp_path / "out"
    main(
        [
            "analyze",
            "parity-split",
            "--ideal",
            "blocks",
            "--horizon",
            "500",
            "--out-dir",
            str(out),
        ]
    )
    doc = read_report(out / "report.json")
    # re-serializing the parsed document reproduces the file exactly
    again = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    assert again == (out / "report.json").read_text()
    # and the extracted verdicts survive the round trip
    assert report_verdicts(doc) == report_verdicts(json.loads(again))


def test_trace_floats_have_full_precision(tmp_path):
    out = tmp_path / "out"
    main(["analyze", "parity-split", "--horizon", "100", "--out-dir", str(out)])
    rows = (out / "trace.csv").read_text().splitlines()[1:]
    n, g = rows[1].split(",")[:2]  # index 2, an even index with irrational gap
    assert n == "2"
    s = math.sin(2.0)
    assert float(g) == pytest.approx(abs(s) / math.sqrt(4.0 + s * s), abs=1e-15)


# ---------------------------------------------------------------------------
# example subcommand


def test_example_lists_builtins(capsys):
    assert main(["example"]) == 0
    out = capsys.readouterr().out
    assert "parity-split" in out and "orthogonal-constant" in out


def test_example_emits_runnable_config(tmp_path, capsys):
    cfg_path = tmp_path / "cfg.json"
    assert main(["example", "parity-split", "--emit-config", str(cfg_path)]) == 0
    capsys.readouterr()
    cfg = load_config(cfg_path)
    cfg.out_dir = str(tmp_path / "out")
    seq, V, ideal = build_experiment(cfg)
    assert seq.k == 1 and V.ambient_dim == 3
    assert ideal.kind.value == "blocks"


def test_example_unknown_name(capsys):
    assert main(["example", "nope"]) > 2
    capsys.readouterr()


# ---------------------------------------------------------------------------
# config machinery


def test_load_config_rejects_unknown_key(tmp_path):
    path = write(
        tmp_path / "c.json",
        json.dumps(
            {
                "sequence": {"builtin": "parity-split"},
                "ideal": {"kind": "blocks"},
                "horizon": 100,
                "eps_grid": [0.5],
                "horizont": 3,
            }
        ),
    )
    with pytest.raises(ConfigError) as excinfo:
        load_config(path)
    assert "horizont" in str(excinfo.value)


def test_load_config_rejects_non_json(tmp_path):
    path = write(tmp_path / "c.json", "not json at all")
    with pytest.raises(ConfigError):
        load_config(path)


def test_config_requires_one_sequence_source():
    cfg = ExperimentConfig(
        sequence={},
        ideal={"kind": "finite"},
        horizon=100,
        eps_grid=[0.5],
        out_dir="out",
    )
    with pytest.raises(ConfigError) as excinfo:
        cfg.validate()
    assert "sequence" in str(excinfo.value)


def test_rotating_family_limit_override():
    limit = np.array([[0.0, 1.0, 0.0, 0.0]])
    seq, V = rotating_family(
        4, 1, {"kind": "power_decay", "scale": 0.5, "exponent": 2.0}, seed=3,
        limit_basis=limit,
    )
    np.testing.assert_allclose(V.basis, limit, atol=1e-12)
    U5 = seq.rule(5)
    assert U5.k == 1 and U5.ambient_dim == 4


def test_rotating_family_needs_room_for_companions():
    with pytest.raises(ConfigError):
        rotating_family(3, 2, {"kind": "constant", "value": 0.0})

"""Tests for the command-line interface.

Exercises every subcommand through ``main()`` directly: exit codes,
output schema, byte-level determinism against a golden file, and the
usage-error paths (which argparse reports on stderr with exit code 2).
"""

import json
from pathlib import Path

import pytest

from divsamp.cli import EXIT_FAIL, EXIT_OK, main

DATA = Path(__file__).parent / "data"


def run_cli(argv, capsys):
    """Invoke main(), normalizing argparse's SystemExit into a return code."""
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


class TestSample:
    def test_matches_golden_file(self, capsys):
        code, out, err = run_cli(
            ["sample", "--method", "naive-laplace", "--p", "53",
             "--seed", "42", "--count", "3"],
            capsys,
        )
        assert code == EXIT_OK
        assert out == (DATA / "sample_naive_seed42.json").read_text()

    def test_seeded_runs_are_byte_identical(self, capsys):
        argv = ["sample", "--method", "laplace-logcos", "--seed", "7", "--count", "5"]
        first = run_cli(argv, capsys)
        second = run_cli(argv, capsys)
        assert first == second

    def test_default_count(self, capsys):
        code, out, _ = run_cli(["sample", "--seed", "1"], capsys)
        payload = json.loads(out)
        assert code == EXIT_OK
        assert payload["count"] == 10
        assert len(payload["values"]) == 10
        assert payload["epsilon"] is None

    def test_epsilon_scales_laplace(self, capsys):
        base = json.loads(run_cli(["sample", "--seed", "3", "--count", "4"], capsys)[1])
        scaled = json.loads(
            run_cli(["sample", "--seed", "3", "--count", "4", "--epsilon", "0.5"], capsys)[1]
        )
        assert scaled["scale"] == 2.0
        assert scaled["values"] == [2.0 * v for v in base["values"]]

    def test_divisibility_shows_in_metadata(self, capsys):
        code, out, _ = run_cli(
            ["sample", "--method", "secure-gaussian", "--n", "2", "--seed", "1"], capsys
        )
        assert code == EXIT_OK
        assert json.loads(out)["uniforms_per_draw"] == 4

    def test_csv_format(self, capsys):
        code, out, _ = run_cli(
            ["sample", "--seed", "11", "--count", "3", "--format", "csv"], capsys
        )
        lines = out.splitlines()
        assert code == EXIT_OK
        assert lines[0].startswith("# command=sample")
        assert lines[1] == "index,value"
        assert len(lines) == 5
        # floats are emitted in round-trip form
        for line in lines[2:]:
            idx, val = line.split(",")
            assert float(val) == pytest.approx(float(val))
            assert repr(float(val)) == val

    def test_out_file(self, capsys, tmp_path):
        dest = tmp_path / "report.json"
        code, out, _ = run_cli(
            ["sample", "--seed", "5", "--count", "2", "--out", str(dest)], capsys
        )
        assert code == EXIT_OK
        assert out == ""
        assert json.loads(dest.read_text())["count"] == 2

    @pytest.mark.parametrize(
        "argv",
        [
            ["sample", "--count", "0"],
            ["sample", "--method", "no-such-method"],
            ["sample", "--p", "0"],
            ["sample", "--p", "54"],
            ["sample", "--n", "0"],
            ["sample", "--epsilon", "0"],
            ["sample", "--method", "box-muller", "--epsilon", "1.0"],
            ["sample", "--method", "naive-laplace", "--n", "2"],
        ],
    )
    def test_usage_errors(self, argv, capsys):
        code, out, err = run_cli(argv, capsys)
        assert code == 2
        assert out == ""
        assert err != ""


class TestAttack:
    def test_mironov_identifies_naive_target(self, capsys):
        code, out, _ = run_cli(
            ["attack", "--seed", "1001", "--candidates", "0.0,1.0,2.0",
             "--target", "1.0", "--max-queries", "40"],
            capsys,
        )
        payload = json.loads(out)
        assert code == EXIT_OK
        assert payload["status"] == "identified"
        assert payload["identified"] == 1.0
        assert payload["target"] == 1.0
        assert payload["queries_used"] == 40
        assert len(payload["trace"]) == 40

    def test_target_defaults_to_first_candidate(self, capsys):
        code, out, _ = run_cli(
            ["attack", "--seed", "1002", "--candidates", "3.5,0.0", "--max-queries", "30"],
            capsys,
        )
        payload = json.loads(out)
        assert code == EXIT_OK
        assert payload["target"] == 3.5
        assert payload["identified"] == 3.5

    def test_hardened_sampler_defeats_attack(self, capsys):
        code, out, _ = run_cli(
            ["attack", "--method", "laplace-logcos", "--seed", "1003",
             "--candidates", "0.0,1.0", "--max-queries", "40"],
            capsys,
        )
        payload = json.loads(out)
        assert code == EXIT_FAIL
        assert payload["status"] == "all_eliminated"
        assert payload["identified"] is None

    def test_pair_attack_on_box_muller(self, capsys):
        code, out, _ = run_cli(
            ["attack", "--attack", "gaussian-pair", "--method", "box-muller",
             "--seed", "1004", "--candidates", "0.0,1.0", "--max-queries", "40"],
            capsys,
        )
        payload = json.loads(out)
        assert code == EXIT_OK
        assert payload["status"] == "identified"
        assert payload["identified"] == 0.0
        # each trace round holds a two-element query pair
        assert all(len(rnd["query"]) == 2 for rnd in payload["trace"])

    def test_pair_attack_defeated_by_secure_gaussian(self, capsys):
        code, out, _ = run_cli(
            ["attack", "--attack", "gaussian-pair", "--method", "secure-gaussian",
             "--seed", "1005", "--candidates", "0.0,1.0", "--max-queries", "60"],
            capsys,
        )
        assert code == EXIT_FAIL
        assert json.loads(out)["status"] == "all_eliminated"

    def test_epsilon_scaled_attack_still_identifies(self, capsys):
        code, out, _ = run_cli(
            ["attack", "--seed", "1006", "--candidates", "0.0,1.0", "--target", "1.0",
             "--epsilon", "0.25", "--max-queries", "40"],
            capsys,
        )
        payload = json.loads(out)
        assert code == EXIT_OK
        assert payload["scale"] == 4.0
        assert payload["identified"] == 1.0

    def test_csv_trace(self, capsys):
        code, out, _ = run_cli(
            ["attack", "--seed", "1007", "--candidates", "0.0,1.0",
             "--max-queries", "10", "--format", "csv"],
            capsys,
        )
        lines = out.splitlines()
        assert lines[0].startswith("# command=attack")
        assert lines[1] == "round,query,eliminated"

    @pytest.mark.parametrize(
        "argv",
        [
            ["attack", "--candidates", ""],
            ["attack", "--candidates", "1.0,abc"],
            ["attack", "--attack", "mironov", "--method", "box-muller"],
            ["attack", "--attack", "gaussian-pair", "--method", "naive-laplace"],
            ["attack", "--attack", "unknown-kind"],
            ["attack", "--window", "-1"],
        ],
    )
    def test_usage_errors(self, argv, capsys):
        code, _, err = run_cli(argv, capsys)
        assert code == 2
        assert err != ""


class TestVerify:
    def test_naive_laplace_passes(self, capsys):
        code, out, _ = run_cli(
            ["verify", "--seed", "2001", "--count", "20000"], capsys
        )
        payload = json.loads(out)
        assert code == EXIT_OK
        assert payload["pass"] is True
        assert [c["name"] for c in payload["checks"]] == ["ks", "variance"]
        assert all(c["pass"] for c in payload["checks"])
        assert payload["reference"] == "laplace"

    def test_secure_gaussian_passes_against_own_family(self, capsys):
        code, out, _ = run_cli(
            ["verify", "--method", "secure-gaussian", "--seed", "2002",
             "--count", "20000"],
            capsys,
        )
        payload = json.loads(out)
        assert code == EXIT_OK
        assert payload["reference"] == "gaussian"
        assert payload["pass"] is True

    def test_wrong_reference_fails(self, capsys):
        code, out, _ = run_cli(
            ["verify", "--seed", "2003", "--count", "20000", "--against", "gaussian"],
            capsys,
        )
        payload = json.loads(out)
        assert code == EXIT_FAIL
        assert payload["pass"] is False

    def test_epsilon_rescales_reference_variance(self, capsys):
        code, out, _ = run_cli(
            ["verify", "--seed", "2004", "--count", "40000", "--epsilon", "0.5"],
            capsys,
        )
        payload = json.loads(out)
        assert code == EXIT_OK
        var_check = payload["checks"][1]
        assert var_check["expected"] == 8.0
        assert abs(payload["moments"]["variance"] - 8.0) <= 0.24

    def test_moments_reported(self, capsys):
        _, out, _ = run_cli(["verify", "--seed", "2005", "--count", "5000"], capsys)
        m = json.loads(out)["moments"]
        assert set(m) == {"mean", "variance", "skewness", "excess_kurtosis"}

    @pytest.mark.parametrize(
        "argv",
        [
            ["verify", "--count", "2"],
            ["verify", "--against", "poisson"],
            ["verify", "--method", "box-muller", "--epsilon", "1.0"],
        ],
    )
    def test_usage_errors(self, argv, capsys):
        code, _, err = run_cli(argv, capsys)
        assert code == 2
        assert err != ""


class TestComplexity:
    def test_theoretical_only_full_precision(self, capsys):
        code, out, _ = run_cli(
            ["complexity", "--p", "53", "--theoretical-only"], capsys
        )
        payload = json.loads(out)
        assert code == EXIT_OK
        assert payload["theoretical_checks"] == 2.0**52.5
        assert payload["empirical_mean_checks"] is None
        assert payload["ratio"] is None

    def test_empirical_tracks_theory_at_small_precision(self, capsys):
        code, out, _ = run_cli(
            ["complexity", "--p", "10", "--count", "150", "--seed", "8"], capsys
        )
        payload = json.loads(out)
        assert code == EXIT_OK
        assert payload["count"] == 150
        assert payload["theoretical_checks"] == 2.0**9.5
        assert 0.7 < payload["ratio"] < 1.3
        assert payload["empirical_mean_checks"] == pytest.approx(
            payload["ratio"] * payload["theoretical_checks"], rel=1e-12
        )

    def test_high_precision_needs_theoretical_flag(self, capsys):
        code, _, err = run_cli(["complexity", "--p", "30"], capsys)
        assert code == 2
        assert "--theoretical-only" in err

    def test_csv_format(self, capsys):
        code, out, _ = run_cli(
            ["complexity", "--p", "8", "--count", "20", "--format", "csv"], capsys
        )
        lines = out.splitlines()
        assert code == EXIT_OK
        assert lines[1] == "quantity,value"
        assert any(line.startswith("theoretical_checks,") for line in lines)

    @pytest.mark.parametrize(
        "argv",
        [
            ["complexity", "--p", "0"],
            ["complexity", "--p", "60", "--theoretical-only"],
            ["complexity", "--p", "8", "--count", "0"],
        ],
    )
    def test_usage_errors(self, argv, capsys):
        code, _, err = run_cli(argv, capsys)
        assert code == 2
        assert err != ""


class TestTopLevel:
    def test_missing_subcommand(self, capsys):
        code, _, err = run_cli([], capsys)
        assert code == 2
        assert err != ""

    def test_entry_point_installed(self):
        import shutil

        assert shutil.which("divsamp") is not None

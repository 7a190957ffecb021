from pathlib import Path

import pytest
from pydantic import ValidationError

import cli
from cli import Command, RunConfig, main
from src.dispersive.errors import ProfileTableError
from src.dispersive.grid import read_table
from verification.engine import SUITES, SuiteResult, register

REPO_CONFIG = Path(__file__).resolve().parent.parent / "config" / "figures.yaml"


class TestRunConfig:
    def test_t_required(self):
        with pytest.raises(ValidationError):
            RunConfig(command=Command.SOLVE)

    def test_solve_needs_rational_time(self):
        with pytest.raises(ValidationError):
            RunConfig(command=Command.SOLVE, t="0.25")

    def test_unparseable_time(self):
        with pytest.raises(ValidationError):
            RunConfig(command=Command.SERIES, t="one third")

    def test_side(self):
        with pytest.raises(ValidationError):
            RunConfig(command=Command.RINGING, side=0)

    def test_output_path_defaults_to_settings(self, output_dir):
        cfg = RunConfig(command=Command.SOLVE, t="1/7")
        assert cfg.output_path("u.csv") == output_dir / "u.csv"


class TestMain:
    def test_solve_writes_grid_and_arcs(self, output_dir, capsys):
        assert main(["solve", "--t", "1/7", "--grid", "64", "--arcs"]) == 0
        frame = read_table(output_dir / "solve_n2_1_7.csv")
        assert len(frame) == 64
        assert (output_dir / "solve_n2_1_7_arcs.csv").exists()
        assert "arcs=" in capsys.readouterr().out

    def test_solve_svg(self, output_dir):
        assert main(["solve", "--t", "2/5", "--grid", "32", "--svg"]) == 0
        assert (output_dir / "solve_n2_2_5.re.svg").exists()
        assert (output_dir / "solve_n2_2_5.im.svg").exists()

    def test_series_point(self, output_dir, capsys):
        assert main(["series", "--t", "0.25", "--x", "0", "--K", "100"]) == 0
        assert "U_K(t=0.25, x=0.0)" in capsys.readouterr().out

    def test_series_grid(self, output_dir):
        assert main(["series", "--t", "1/3", "--K", "50", "--grid", "16"]) == 0
        assert len(read_table(output_dir / "series_n2_1_3_K50.csv")) == 16

    def test_ringing_table(self, output_dir):
        assert main(["ringing", "--n", "3", "--s-lo", "-1", "--s-hi", "1", "--count", "5"]) == 0
        frame = read_table(output_dir / "ringing_n3_side+1.csv")
        assert list(frame["s"]) == [-1.0, -0.5, 0.0, 0.5, 1.0]

    def test_ringing_failure_exit_status(self, output_dir, capsys, monkeypatch):
        def failing_table(profile, s_lo, s_hi, count):
            raise ProfileTableError([(0.5, 2e-7), (1.0, 3e-6)])

        monkeypatch.setattr(cli, "profile_table", failing_table)
        assert main(["ringing", "--n", "2", "--s-lo", "0.5", "--s-hi", "1", "--count", "2"]) == 1
        err = capsys.readouterr().err
        assert "failed s=0.5" in err
        assert "failed s=1" in err

    def test_approx(self, output_dir, capsys):
        assert main(["approx", "--t", "0.6180339887498949", "--M", "4", "--M-max", "50"]) == 0
        out = capsys.readouterr().out
        assert "approximant(M=4.0) = 5/8" in out
        assert "in A_m" in out

    def test_verify_suite(self, output_dir, capsys):
        assert main(["verify", "--suite", "parseval", "--seed", "1"]) == 0
        assert "PASS parseval" in capsys.readouterr().out
        assert (output_dir / "verify_parseval_seed1.csv").exists()

    def test_verify_failure_exit_status(self, output_dir, capsys):
        @register("_never_holds")
        def _fails(seed, quick):
            return SuiteResult("_never_holds", False, {"gap": 1.0}, "gap too wide")

        try:
            assert main(["verify", "--suite", "_never_holds"]) == 1
        finally:
            SUITES.pop("_never_holds", None)
        captured = capsys.readouterr()
        assert "FAIL _never_holds" in captured.out
        assert "gap too wide" in captured.err
        assert (output_dir / "verify__never_holds_seed0.csv").exists()

    def test_figure_unknown_preset(self, output_dir, monkeypatch):
        monkeypatch.setenv("TALBOT_FIGURES_CONFIG", str(REPO_CONFIG))
        assert main(["figure", "--name", "fig99"]) == 2

    @pytest.mark.parametrize(
        "argv",
        [
            ["solve"],
            ["solve", "--t", "1/7", "--n", "1"],
            ["solve", "--t", "1/7", "--gamma", "0.7"],
            ["verify", "--suite", "nope"],
            ["ringing", "--form", "cubic"],
            ["teleport"],
        ],
    )
    def test_bad_arguments_exit_2(self, argv, output_dir):
        assert main(argv) == 2

    def test_computation_error_exit_1(self, output_dir):
        # t = 1 lies outside (0, 1)
        assert main(["approx", "--t", "1/1", "--M", "4"]) == 1

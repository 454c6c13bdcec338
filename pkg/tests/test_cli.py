import json
import math

import numpy as np
import pandas as pd
import pytest

from kleinmetric.cli import build_parser, main, overrides_from_args
from kleinmetric.commands import cmd_spectrum
from kleinmetric.config import RunConfig
from kleinmetric.errors import NonPositiveSpectrumError


@pytest.fixture
def out(tmp_path, monkeypatch):
    monkeypatch.delenv("KLEINMETRIC_OUT", raising=False)
    return tmp_path / "out"


def run(*argv):
    return main([str(a) for a in argv])


class TestSpectrumCommand:
    def test_two_sites(self, out):
        assert run("spectrum", "--n", 2, "--h", 1, "--mass", 0, "--out", out) == 0
        frame = pd.read_csv(out / "spectrum.csv")
        assert list(frame.columns) == ["mode_index", "kinetic_eigenvalue", "energy_plus", "energy_minus"]
        expected = [[1, 1.0, 1.0, -1.0], [2, 3.0, math.sqrt(3.0), -math.sqrt(3.0)]]
        np.testing.assert_allclose(frame.to_numpy(), expected, atol=1e-14)

    def test_single_site_with_mass(self, out):
        assert run("spectrum", "--n", 1, "--h", 1, "--mass", 2, "--out", out) == 0
        row = pd.read_csv(out / "spectrum.csv").iloc[0]
        assert row["kinetic_eigenvalue"] == pytest.approx(6.0)
        assert row["energy_plus"] == pytest.approx(math.sqrt(6.0))
        assert row["energy_minus"] == pytest.approx(-math.sqrt(6.0))

    def test_invalid_spacing_writes_nothing(self, out, capsys):
        assert run("spectrum", "--h", 0, "--out", out) == 2
        assert not out.exists()
        err = capsys.readouterr().err.strip()
        assert "Grid spacing" in err
        assert len(err.splitlines()) == 1

    def test_json_format(self, out):
        assert run("spectrum", "--n", 3, "--out", out, "--format", "json") == 0
        records = json.loads((out / "spectrum.json").read_text())
        assert [r["mode_index"] for r in records] == [1, 2, 3]

    def test_byte_identical_reruns(self, tmp_path, monkeypatch):
        monkeypatch.delenv("KLEINMETRIC_OUT", raising=False)
        run("spectrum", "--n", 16, "--h", 0.3, "--out", tmp_path / "a")
        run("spectrum", "--n", 16, "--h", 0.3, "--out", tmp_path / "b")
        assert (tmp_path / "a" / "spectrum.csv").read_bytes() == (tmp_path / "b" / "spectrum.csv").read_bytes()

    def test_environment_output_directory(self, tmp_path, monkeypatch):
        monkeypatch.setenv("KLEINMETRIC_OUT", str(tmp_path / "env"))
        assert run("spectrum", "--n", 2) == 0
        assert (tmp_path / "env" / "spectrum.csv").exists()

    def test_non_positive_spectrum_exit_code(self, out, monkeypatch):
        def broken(cfg):
            raise NonPositiveSpectrumError("Smallest kinetic eigenvalue 0.000e+00 is not positive")

        monkeypatch.setattr("kleinmetric.commands.base.kinetic_spectrum", broken)
        assert run("spectrum", "--n", 2, "--out", out) == 3
        assert not out.exists()

    def test_library_entry_point(self, out):
        config = RunConfig.load(overrides={"lattice": {"n": 4}, "output": {"directory": str(out)}}, environ={})
        report = cmd_spectrum(config)
        assert report.exit_code == 0
        assert len(report.tables["spectrum"]) == 4


class TestMetricCheckCommand:
    def test_default_metric_passes(self, out):
        assert run("metric-check", "--n", 8, "--out", out) == 0
        report = json.loads((out / "metric_report.json").read_text())
        assert report["positive"] is True
        assert report["passed"] is True
        assert report["dieudonne_residual"] <= 1e-13
        assert report["hermiticity_residual"] <= 1e-9
        assert report["theta_condition_number"] > 1
        assert len(report["modes"]) == 8

    def test_violated_predicate_exits_four(self, out):
        code = run("metric-check", "--n", 1, "--h", 1, "--mass", 0, "--alpha", 1, "--beta", 1.5, "--out", out)
        assert code == 4
        report = json.loads((out / "metric_report.json").read_text())
        assert report["positive"] is False
        assert report["modes"][0]["kinetic_eigenvalue"] == pytest.approx(2.0)
        assert report["modes"][0]["verdict"] == "negative"
        assert report["hermiticity_residual"] is None
        assert report["negative_norm"] < 0

    @pytest.mark.parametrize("n,h,mass", [(4, 1.0, 0.0), (32, 0.1, 3.0), (16, 2.0, 0.5)])
    def test_continuous_form_always_positive(self, out, n, h, mass):
        code = run("metric-check", "--n", n, "--h", h, "--mass", mass, "--mode", "continuous", "--alpha", 1, "--beta", 0.5, "--out", out)
        assert code == 0
        assert json.loads((out / "metric_report.json").read_text())["positive"] is True

    def test_per_mode_list(self, out):
        assert run("metric-check", "--n", 3, "--alpha", "1,2,3", "--beta", "0.1,0.2,0.3", "--out", out) == 0

    def test_list_length_mismatch(self, out):
        assert run("metric-check", "--n", 3, "--alpha", "1,2", "--out", out) == 2
        assert not out.exists()


class TestEvolveCommand:
    def test_zero_time_single_row(self, out):
        assert run("evolve", "--n", 16, "--h", 0.5, "--t-max", 0, "--out", out) == 0
        frame = pd.read_csv(out / "norms.csv")
        assert list(frame.columns) == ["t", "theta_norm", "naive_norm"]
        assert len(frame) == 1
        assert frame["theta_norm"][0] == pytest.approx(1.0, rel=1e-12)

    def test_eigenstate_norms_constant(self, out):
        code = run("evolve", "--n", 8, "--initial", "eigenstate", "--state-mode", 2, "--branch", -1, "--t-max", 5, "--steps", 50, "--out", out)
        assert code == 0
        frame = pd.read_csv(out / "norms.csv")
        assert np.ptp(frame["theta_norm"]) <= 1e-10
        assert np.ptp(frame["naive_norm"]) <= 1e-10 * frame["naive_norm"].max()

    def test_mixed_branch_naive_norm_oscillates(self, out):
        code = run("evolve", "--n", 2, "--h", 1, "--mass", 0, "--initial", "mixed", "--state-mode", 2, "--t-max", 4, "--steps", 200, "--out", out)
        assert code == 0
        frame = pd.read_csv(out / "norms.csv")
        assert frame["naive_norm"].max() / frame["naive_norm"].min() > 1.01
        assert np.ptp(frame["theta_norm"]) <= 1e-10

    def test_final_state_document(self, out):
        assert run("evolve", "--n", 16, "--h", 0.5, "--t-max", 2, "--steps", 4, "--out", out) == 0
        state = json.loads((out / "final_state.json").read_text())
        assert set(state) == {"t", "n", "upper", "lower", "theta_norm", "naive_norm"}
        assert state["t"] == 2.0
        assert state["n"] == 16
        assert len(state["upper"]["real"]) == 16

    def test_indefinite_metric_exits_four(self, out):
        assert run("evolve", "--n", 4, "--alpha", 1, "--beta", 5, "--out", out) == 4
        assert not out.exists()


class TestConvergeCommand:
    def test_second_order(self, out):
        assert run("converge", "--mass", 0, "--levels", "9,19,39", "--length", math.pi, "--out", out) == 0
        frame = pd.read_csv(out / "convergence.csv")
        assert list(frame.columns) == [
            "n",
            "h",
            "eigenvalue_error_1",
            "eigenvalue_error_2",
            "eigenvalue_error_3",
            "fitted_order",
            "theta_condition_number",
        ]
        assert 1.8 <= frame["fitted_order"][0] <= 2.2

    def test_mass_shift_leaves_errors(self, tmp_path, monkeypatch):
        monkeypatch.delenv("KLEINMETRIC_OUT", raising=False)
        run("converge", "--mass", 0, "--levels", "19", "--out", tmp_path / "m0")
        run("converge", "--mass", 2, "--levels", "19", "--out", tmp_path / "m2")
        massless = pd.read_csv(tmp_path / "m0" / "convergence.csv")
        massive = pd.read_csv(tmp_path / "m2" / "convergence.csv")
        columns = ["eigenvalue_error_1", "eigenvalue_error_2", "eigenvalue_error_3"]
        np.testing.assert_allclose(massive[columns].to_numpy(), massless[columns].to_numpy(), atol=1e-10)

    def test_condition_number_grows(self, out):
        code = run("converge", "--mass", 0, "--levels", "9,19,39,79", "--mode", "continuous", "--alpha", 1, "--beta", 0.5, "--out", out)
        assert code == 0
        condition = pd.read_csv(out / "convergence.csv")["theta_condition_number"]
        assert np.all(np.diff(condition) > 0)

    def test_per_mode_lists_rejected(self, out):
        assert run("converge", "--n", 3, "--alpha", "1,2,3", "--out", out) == 2


class TestParser:
    def test_overrides_only_given_flags(self):
        args = build_parser().parse_args(["evolve", "--n", "4", "--sigma", "2.0"])
        assert overrides_from_args(args) == {"lattice": {"n": 4}, "evolution": {"initial": {"sigma": 2.0}}}

    def test_config_file_with_flag_override(self, tmp_path, out):
        path = tmp_path / "run.toml"
        path.write_text("[lattice]\nn = 5\nmass = 0.0\n")
        assert run("spectrum", "--config", path, "--n", 3, "--out", out) == 0
        assert len(pd.read_csv(out / "spectrum.csv")) == 3

    def test_unknown_config_key(self, tmp_path, out):
        path = tmp_path / "run.json"
        path.write_text(json.dumps({"lattice": {"n": 4, "spacing": 1}}))
        assert run("spectrum", "--config", path, "--out", out) == 2

    def test_output_under_regular_file_exits_two(self, tmp_path, capsys):
        blocker = tmp_path / "blocker"
        blocker.write_text("")
        assert run("spectrum", "--n", 2, "--out", blocker / "sub") == 2
        err = capsys.readouterr().err.strip()
        assert err.startswith("kleinmetric spectrum: Cannot write to output directory")
        assert len(err.splitlines()) == 1

    def test_bad_flag_value_is_one_line(self, capsys):
        with pytest.raises(SystemExit) as exc_info:
            run("spectrum", "--n", "abc")
        assert exc_info.value.code == 2
        err = capsys.readouterr().err.strip()
        assert err.startswith("kleinmetric spectrum: argument --n")
        assert len(err.splitlines()) == 1

import json

import numpy as np
import pytest

from fewlevel.cli import main, trajectory_columns
from fewlevel.model import diamond_preset, lambda_preset, spec_from_dict


def read_csv(path):
    """Parse one of our CSVs into (metadata dict, column -> array)."""
    meta, header, rows = {}, None, []
    with open(path) as fh:
        for line in fh:
            line = line.rstrip("\n")
            if line.startswith("# "):
                if ": " in line[2:]:
                    key, _, value = line[2:].partition(": ")
                    meta[key] = value
                continue
            if header is None:
                header = line.split(",")
                continue
            rows.append([float(x) for x in line.split(",")])
    data = np.array(rows)
    return meta, {name: data[:, k] for k, name in enumerate(header)}


class TestSimulate:
    def test_fig1_cold_run(self, tmp_path, capsys):
        out = tmp_path / "fig1.csv"
        assert main(["simulate", "fig1", "--temp", "0", "-o", str(out)]) == 0
        printed = capsys.readouterr().out
        assert "P=" in printed and "termination=" in printed
        meta, cols = read_csv(out)
        assert meta["version"]
        assert json.loads(meta["spec"])["levels"][0]["label"] == "a"
        assert cols["p_b"][-1] > 0.999
        assert cols["P"][-1] < 1e-6

    def test_column_schema(self, tmp_path):
        out = tmp_path / "fig4a.csv"
        assert main(["simulate", "fig4a", "--tmax", "5", "-o", str(out)]) == 0
        _, cols = read_csv(out)
        assert list(cols) == trajectory_columns(diamond_preset("seek", 0.5, 0.2, 0.4))
        assert list(cols)[:5] == ["t", "p_g", "p_a", "p_b", "p_e"]
        assert "J_L" in cols and "J_R" in cols and "Q" in cols

    def test_single_bath_has_no_group_columns(self, tmp_path):
        out = tmp_path / "fig2.csv"
        assert main(["simulate", "fig2", "--tmax", "5", "-o", str(out)]) == 0
        _, cols = read_csv(out)
        assert list(cols) == [
            "t", "p_g", "p_b", "p_a", "re_rho_ag", "im_rho_ag", "re_rho_bg",
            "im_rho_bg", "P", "J_ag", "J_bg", "J_total", "E", "W", "Q"]

    def test_pre_window_rows_present(self, tmp_path):
        out = tmp_path / "x.csv"
        assert main(["simulate", "fig2", "--tmax", "5", "-o", str(out)]) == 0
        _, cols = read_csv(out)
        assert cols["t"][0] == pytest.approx(-2.0)
        pre = cols["t"] < 0
        assert np.all(cols["P"][pre] == 0.0)
        assert np.all(cols["W"][pre] == 0.0)

    def test_runs_are_bitwise_reproducible(self, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        for path in (a, b):
            assert main(["simulate", "fig3b", "--tmax", "10",
                         "-o", str(path)]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_custom_round_trip_byte_identical(self, tmp_path):
        spec_path = tmp_path / "fig1.json"
        assert main(["emit-spec", "fig1", "-o", str(spec_path)]) == 0
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        assert main(["simulate", "fig1", "--tmax", "20", "-o", str(a)]) == 0
        assert main(["simulate", "custom", "--spec", str(spec_path),
                     "--tmax", "20", "-o", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_overrides_reach_the_model(self, tmp_path):
        out = tmp_path / "warm.csv"
        assert main(["simulate", "fig1", "--temp", "0.1", "--rabi", "0.4",
                     "--tmax", "5", "-o", str(out)]) == 0
        meta, _ = read_csv(out)
        doc = json.loads(meta["spec"])
        assert doc["drives"][0]["rabi"] == 0.4
        assert all(tr["temperature"] == 0.1 for tr in doc["transitions"])

    def test_two_bath_overrides(self, tmp_path):
        out = tmp_path / "f4.csv"
        assert main(["simulate", "fig4a", "--temp-left", "0.3", "--tmax", "5",
                     "-o", str(out)]) == 0
        doc = json.loads(read_csv(out)[0]["spec"])
        temps = {tr["bath"]: tr["temperature"] for tr in doc["transitions"]}
        assert temps == {"L": 0.3, "R": 0.4}

    def test_batch_mode(self, tmp_path, capsys):
        outdir = tmp_path / "runs"
        assert main(["simulate", "fig1", "fig2", "--batch",
                     "--outdir", str(outdir), "--tmax", "5"]) == 0
        assert (outdir / "fig1.csv").exists()
        assert (outdir / "fig2.csv").exists()
        printed = capsys.readouterr().out
        assert "fig1:" in printed and "fig2:" in printed

    def test_summary_reports_group_currents(self, capsys, tmp_path):
        out = tmp_path / "f5.csv"
        assert main(["simulate", "fig5b", "-o", str(out)]) == 0
        printed = capsys.readouterr().out
        assert "J_L=" in printed and "J_R=" in printed

    def test_dual_normalization_for_small_gap_drive(self, capsys, tmp_path):
        out = tmp_path / "f3b.csv"
        assert main(["simulate", "fig3b", "--tmax", "5", "-o", str(out)]) == 0
        printed = capsys.readouterr().out
        assert "P/E_ag=" in printed


class TestSteadyCommand:
    def test_fig2_values(self, capsys):
        assert main(["steady", "fig2", "--temp", "0", "--json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["null_dimension"] == 1
        rho_re = np.array(doc["states"][0]["re"])
        rho_im = np.array(doc["states"][0]["im"])
        assert rho_re[2, 2] == pytest.approx(1 / 3, abs=1e-6)
        assert rho_im[2, 0] == pytest.approx(-1 / 3, abs=1e-6)
        assert doc["power"] == pytest.approx(1 / 3, abs=1e-6)

    def test_degenerate_case_refuses_unique_state(self, capsys):
        assert main(["steady", "fig1", "--rabi", "0", "--temp", "0"]) == 0
        printed = capsys.readouterr().out
        assert "null dimension: 4" in printed
        assert "no unique steady state" in printed
        assert "P =" not in printed

    def test_driven_cold_lambda(self, capsys):
        assert main(["steady", "fig1", "--rabi", "0.5", "--temp", "0",
                     "--json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        rho_re = np.array(doc["states"][0]["re"])
        assert rho_re[1, 1] == pytest.approx(1.0, abs=1e-9)
        assert doc["power"] == pytest.approx(0.0, abs=1e-9)
        assert all(abs(v) < 1e-9 for v in doc["currents"].values())

    def test_gammas_reported(self, capsys):
        assert main(["steady", "fig4a", "--json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert set(doc["gammas"]) == {"ea", "ag", "eb", "bg"}
        assert set(doc["group_currents"]) == {"L", "R"}


class TestEmitSpec:
    def test_fig4a_groups(self, capsys):
        assert main(["emit-spec", "fig4a"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["bath_groups"] == {"L": [0, 1], "R": [2, 3]}
        pairs = [(tr["upper"], tr["lower"]) for tr in doc["transitions"]]
        assert pairs == [("e", "a"), ("a", "g"), ("e", "b"), ("b", "g")]

    def test_fig1_small_gap(self, capsys):
        assert main(["emit-spec", "fig1"]) == 0
        doc = json.loads(capsys.readouterr().out)
        energies = {lv["label"]: lv["energy"] for lv in doc["levels"]}
        assert energies["e"] - energies["b"] == pytest.approx(0.99)

    def test_round_trip_reproduces_spec(self, capsys):
        assert main(["emit-spec", "fig1"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert spec_from_dict(doc) == lambda_preset(0.5, 0.0)


class TestExitCodes:
    def test_malformed_json_is_usage_error(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text('{"levels": [\n')
        assert main(["simulate", "custom", "--spec", str(bad)]) == 2
        err = capsys.readouterr().err
        assert "bad.json:" in err  # line/column diagnostics

    def test_schema_violation_is_usage_error(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps({"levels": [{"label": "g", "energy": 0.0},
                                              {"label": "e", "energy": 1.0}],
                                   "transitions": [{"upper": "e"}]}))
        assert main(["simulate", "custom", "--spec", str(bad)]) == 2
        assert "transitions[0]" in capsys.readouterr().err

    def test_custom_without_spec_is_usage_error(self, capsys):
        assert main(["simulate", "custom"]) == 2

    def test_unwritable_output_is_io_error(self, tmp_path):
        assert main(["simulate", "fig2", "--tmax", "5",
                     "-o", str(tmp_path / "no" / "dir" / "x.csv")]) == 4

    def test_missing_spec_file_is_io_error(self):
        assert main(["simulate", "custom", "--spec", "/no/such/file.json"]) == 4

    def test_unknown_scenario_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["simulate", "fig9"])
        assert excinfo.value.code == 2

    def test_wrong_bath_override_is_usage_error(self, capsys):
        assert main(["simulate", "fig1", "--temp-left", "0.3"]) == 2
        assert "single bath" in capsys.readouterr().err

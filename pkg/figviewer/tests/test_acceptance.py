"""Acceptance: render the benchmark scenario outputs end to end.

The trajectory CSVs are produced by the simulation engine's public CLI
(invoked as a subprocess); this package touches nothing but the CSVs.
"""

import subprocess
import sys

import pytest

from figviewer.recipes import recipe_for
from figviewer.render import load_csv, render


def simulate(scenario, out_path, *extra):
    cmd = [sys.executable, "-m", "fewlevel.cli", "simulate", scenario,
           "-o", str(out_path), *extra]
    proc = subprocess.run(cmd, capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    return out_path


@pytest.fixture(scope="module")
def scenario_csvs(tmp_path_factory):
    root = tmp_path_factory.mktemp("csv")
    return {
        "fig1": [simulate("fig1", root / "fig1_t0.csv", "--temp", "0"),
                 simulate("fig1", root / "fig1_t01.csv", "--temp", "0.1")],
        "fig2": [simulate("fig2", root / "fig2_t0.csv", "--temp", "0"),
                 simulate("fig2", root / "fig2_t03.csv", "--temp", "0.3")],
        "fig4a": [simulate("fig4a", root / "fig4a.csv")],
        "fig4b": [simulate("fig4b", root / "fig4b.csv")],
        "fig5a": [simulate("fig5a", root / "fig5a.csv")],
        "fig5b": [simulate("fig5b", root / "fig5b.csv")],
    }


def test_b1_render_benchmark_figures(scenario_csvs, tmp_path):
    for figure_id, csvs in scenario_csvs.items():
        recipe = recipe_for(figure_id)
        # the caption's curve set must be present in the inputs
        table = load_csv(csvs[0])
        for name in recipe.required_columns():
            assert name in table, f"{figure_id}: {name} missing from CSV"
        first = tmp_path / f"{figure_id}.png"
        second = tmp_path / f"{figure_id}_again.png"
        render(recipe, csvs, first)
        render(recipe, csvs, second)
        assert first.exists() and first.stat().st_size > 0
        assert first.read_bytes() == second.read_bytes(), \
            f"{figure_id}: render is not byte-for-byte reproducible"
        print(f"B1 {figure_id}: PASS ({first.stat().st_size} bytes)")


def test_b1_curve_sets_cover_the_captions(scenario_csvs):
    # populations panel for the three-level figures
    for figure_id in ("fig1", "fig2"):
        panel_cols = [c for p in recipe_for(figure_id).panels for c in p.columns]
        assert sum(c.startswith("p_") for c in panel_cols) == 3
        assert "P" in panel_cols and "J_total" in panel_cols
    # power and both grouped currents for the two-bath figures
    for figure_id in ("fig4a", "fig4b", "fig5a", "fig5b"):
        panel_cols = [c for p in recipe_for(figure_id).panels for c in p.columns]
        assert {"P", "J_L", "J_R"} <= set(panel_cols)

import numpy as np
import pytest

from figviewer.cli import main
from figviewer.recipes import RECIPES, recipe_for
from figviewer.render import RenderError, load_csv, render


def synthetic_csv(path, columns, n_rows=40):
    """Schema-shaped CSV with deterministic made-up numbers."""
    t = np.linspace(-2.0, 8.0, n_rows)
    lines = ["# fewlevel trajectory export", "# version: test",
             ",".join(columns)]
    for k, tk in enumerate(t):
        values = [tk] + [np.sin(0.3 * tk + i) * 0.1 + 0.2 * i
                         for i in range(1, len(columns))]
        lines.append(",".join(format(v, ".17g") for v in values))
    path.write_text("\n".join(lines) + "\n")
    return path


THREE_LEVEL_COLS = ["t", "p_a", "p_b", "p_e", "re_rho_ea", "im_rho_ea",
                    "re_rho_eb", "im_rho_eb", "P", "J_ea", "J_eb",
                    "J_total", "E", "W", "Q"]
TWO_BATH_COLS = ["t", "p_g", "p_a", "p_b", "p_e", "P", "J_ea", "J_ag",
                 "J_eb", "J_bg", "J_total", "J_L", "J_R", "E", "W", "Q"]


class TestLoadCsv:
    def test_reads_columns_and_skips_metadata(self, tmp_path):
        path = synthetic_csv(tmp_path / "x.csv", THREE_LEVEL_COLS)
        table = load_csv(path)
        assert set(table) == set(THREE_LEVEL_COLS)
        assert len(table["t"]) == 40

    def test_empty_data_rejected(self, tmp_path):
        path = tmp_path / "empty.csv"
        path.write_text("# meta\nt,p_a,P\n")
        with pytest.raises(RenderError, match="no data rows"):
            load_csv(path)

    def test_missing_file_rejected(self):
        with pytest.raises(RenderError, match="cannot read"):
            load_csv("/no/such/file.csv")


class TestRecipes:
    def test_all_known_figures_have_recipes(self):
        assert set(RECIPES) == {"fig1", "fig2", "fig3a", "fig3b",
                                "fig4a", "fig4b", "fig5a", "fig5b"}

    def test_unknown_figure(self):
        with pytest.raises(KeyError, match="unknown figure"):
            recipe_for("fig9")

    def test_required_columns(self):
        assert "J_L" in recipe_for("fig4a").required_columns()
        assert "p_a" in recipe_for("fig3a").required_columns()


class TestRender:
    def test_writes_png(self, tmp_path):
        csv = synthetic_csv(tmp_path / "run.csv", THREE_LEVEL_COLS)
        out = tmp_path / "fig1.png"
        render(recipe_for("fig1"), [csv], out)
        assert out.exists()
        assert out.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"

    def test_writes_svg(self, tmp_path):
        csv = synthetic_csv(tmp_path / "run.csv", TWO_BATH_COLS)
        out = tmp_path / "fig4a.svg"
        render(recipe_for("fig4a"), [csv], out)
        assert out.read_text().lstrip().startswith("<?xml")

    def test_two_csv_comparison(self, tmp_path):
        a = synthetic_csv(tmp_path / "a.csv", THREE_LEVEL_COLS)
        b = synthetic_csv(tmp_path / "b.csv", THREE_LEVEL_COLS)
        out = tmp_path / "fig1.png"
        render(recipe_for("fig1"), [a, b], out)
        assert out.exists()

    def test_missing_column_names_column_and_file(self, tmp_path):
        cols = [c for c in TWO_BATH_COLS if c != "J_R"]
        csv = synthetic_csv(tmp_path / "broken.csv", cols)
        out = tmp_path / "fig4a.png"
        with pytest.raises(RenderError, match=r"broken\.csv.*'J_R'"):
            render(recipe_for("fig4a"), [csv], out)
        assert not out.exists()

    def test_empty_csv_writes_nothing(self, tmp_path):
        path = tmp_path / "empty.csv"
        path.write_text(",".join(THREE_LEVEL_COLS) + "\n")
        out = tmp_path / "fig1.png"
        with pytest.raises(RenderError):
            render(recipe_for("fig1"), [path], out)
        assert not out.exists()

    def test_unsupported_format_rejected(self, tmp_path):
        csv = synthetic_csv(tmp_path / "run.csv", THREE_LEVEL_COLS)
        with pytest.raises(RenderError, match="format"):
            render(recipe_for("fig1"), [csv], tmp_path / "fig1.pdf")

    def test_identical_inputs_identical_bytes(self, tmp_path):
        csv = synthetic_csv(tmp_path / "run.csv", THREE_LEVEL_COLS)
        outs = [tmp_path / "one.png", tmp_path / "two.png"]
        for out in outs:
            render(recipe_for("fig1"), [csv], out)
        assert outs[0].read_bytes() == outs[1].read_bytes()


class TestCli:
    def test_happy_path(self, tmp_path, capsys):
        csv = synthetic_csv(tmp_path / "run.csv", THREE_LEVEL_COLS)
        out = tmp_path / "fig1.png"
        assert main(["--figure", "fig1", "--csv", str(csv),
                     "--out", str(out)]) == 0
        assert "wrote" in capsys.readouterr().out
        assert out.exists()

    def test_missing_column_is_nonzero_exit(self, tmp_path, capsys):
        csv = synthetic_csv(tmp_path / "run.csv", THREE_LEVEL_COLS)
        assert main(["--figure", "fig4a", "--csv", str(csv),
                     "--out", str(tmp_path / "x.png")]) == 1
        assert "J_L" in capsys.readouterr().err

    def test_unknown_figure_is_usage_error(self, tmp_path):
        with pytest.raises(SystemExit) as excinfo:
            main(["--figure", "fig9", "--csv", "x.csv", "--out", "y.png"])
        assert excinfo.value.code == 2

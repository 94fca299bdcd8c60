"""CSV loading and deterministic matplotlib rendering."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

# fixed hash salt so SVG element ids do not vary between runs
matplotlib.rcParams["svg.hashsalt"] = "figviewer"

LINESTYLES = ["-", "--", ":", "-."]


class RenderError(RuntimeError):
    """Unusable input: missing columns, empty data, unknown format."""


def load_csv(path):
    """Read one trajectory CSV into a column -> array mapping."""
    header = None
    rows = []
    try:
        fh = open(path)
    except OSError as exc:
        raise RenderError(f"cannot read {path}: {exc}") from exc
    with fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if header is None:
                header = line.split(",")
                continue
            rows.append([float(x) for x in line.split(",")])
    if header is None:
        raise RenderError(f"{path}: no header row found")
    if not rows:
        raise RenderError(f"{path}: no data rows")
    data = np.asarray(rows)
    return {name: data[:, k] for k, name in enumerate(header)}


def _check_columns(recipe, tables, paths):
    for table, path in zip(tables, paths):
        for name in recipe.required_columns():
            if name not in table:
                raise RenderError(
                    f"{path}: column {name!r} required by recipe "
                    f"{recipe.figure_id!r} is missing")


def render(recipe, csv_paths, out_path, dpi=150):
    """Draw one recipe over one or more CSVs and write the image.

    The output format follows the file extension (png or svg). The first
    CSV is drawn solid, later ones dashed/dotted. Rendering is
    deterministic: identical inputs give byte-identical files.
    """
    if not csv_paths:
        raise RenderError("at least one CSV is required")
    fmt = str(out_path).rsplit(".", 1)[-1].lower()
    if fmt not in ("png", "svg"):
        raise RenderError(f"unsupported output format {fmt!r}; use png or svg")
    tables = [load_csv(p) for p in csv_paths]
    _check_columns(recipe, tables, csv_paths)

    n_panels = len(recipe.panels)
    fig, axes = plt.subplots(n_panels, 1, sharex=True,
                             figsize=(6.0, 2.6 * n_panels), squeeze=False)
    axes = axes[:, 0]

    for ax, panel in zip(axes, recipe.panels):
        for k, (table, path) in enumerate(zip(tables, csv_paths)):
            style = LINESTYLES[k % len(LINESTYLES)]
            for name in panel.columns:
                label = name if k == 0 else None
                ax.plot(table["t"], table[name], style, lw=1.4,
                        color=panel.colors.get(name), label=label)
        ax.axvline(0.0, color="0.8", lw=0.8, zorder=0)
        ax.set_ylabel(panel.ylabel)
        ax.legend(loc="best", fontsize=8, frameon=False)
    axes[-1].set_xlabel(r"$t$  (units of $1/\kappa$)")

    if recipe.inset_column:
        inset = axes[0].inset_axes([0.6, 0.55, 0.36, 0.4])
        for k, table in enumerate(tables):
            inset.plot(table["t"], table[recipe.inset_column],
                       LINESTYLES[k % len(LINESTYLES)], lw=1.0,
                       color="tab:red")
        inset.set_ylabel(recipe.inset_column, fontsize=7)
        inset.tick_params(labelsize=6)

    fig.align_ylabels(axes)
    fig.tight_layout()
    if fmt == "png":
        # drop the library version string so bytes depend on inputs only
        fig.savefig(out_path, dpi=dpi, metadata={"Software": None})
    else:
        fig.savefig(out_path, metadata={"Date": None})
    plt.close(fig)
    return out_path

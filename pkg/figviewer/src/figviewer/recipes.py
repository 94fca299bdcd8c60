"""Figure recipes: which columns of which CSVs land in which panel.

A recipe is pure layout: panel list, the column names each panel draws,
and an optional inset. The first CSV of a recipe is drawn solid, later
ones dashed/dotted, matching the usual solid-vs-dashed comparison of a
baseline run against a variant (different temperature or drive
strength).
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class PanelSpec:
    """One axes: columns to draw against t, plus labeling."""

    columns: tuple
    ylabel: str
    colors: dict = field(default_factory=dict)


@dataclass(frozen=True)
class FigureRecipe:
    """Layout of one figure: stacked panels and an optional inset."""

    figure_id: str
    panels: tuple
    inset_column: str | None = None

    def required_columns(self):
        needed = ["t"]
        for panel in self.panels:
            needed.extend(panel.columns)
        if self.inset_column:
            needed.append(self.inset_column)
        return needed


_POPULATION_COLORS = {"p_g": "tab:green", "p_a": "tab:red",
                      "p_b": "tab:orange", "p_e": "tab:gray"}
_FLOW_COLORS = {"P": "black", "J_total": "tab:blue",
                "J_L": "purple", "J_R": "tab:blue"}

_THREE_LEVEL_FLOW = PanelSpec(("P", "J_total"),
                              r"$P$, $J$  (units of $E_{\mathrm{ref}}\kappa$)",
                              _FLOW_COLORS)
_TWO_BATH_FLOW = PanelSpec(("P", "J_L", "J_R"),
                           r"$P$, $J_L$, $J_R$  (units of $E_{\mathrm{ref}}\kappa$)",
                           _FLOW_COLORS)

RECIPES = {
    "fig1": FigureRecipe("fig1", (
        PanelSpec(("p_a", "p_b", "p_e"), "populations", _POPULATION_COLORS),
        _THREE_LEVEL_FLOW,
    )),
    "fig2": FigureRecipe("fig2", (
        PanelSpec(("p_g", "p_b", "p_a"), "populations", _POPULATION_COLORS),
        _THREE_LEVEL_FLOW,
    )),
    "fig3a": FigureRecipe("fig3a", (
        PanelSpec(("P",), r"$P$  (units of $E_{\mathrm{ref}}\kappa$)",
                  _FLOW_COLORS),
    ), inset_column="p_a"),
    "fig3b": FigureRecipe("fig3b", (
        PanelSpec(("P",), r"$P$  (units of $E_{\mathrm{ref}}\kappa$)",
                  _FLOW_COLORS),
    ), inset_column="p_a"),
    "fig4a": FigureRecipe("fig4a", (_TWO_BATH_FLOW,)),
    "fig4b": FigureRecipe("fig4b", (_TWO_BATH_FLOW,)),
    "fig5a": FigureRecipe("fig5a", (_TWO_BATH_FLOW,)),
    "fig5b": FigureRecipe("fig5b", (_TWO_BATH_FLOW,)),
}


def recipe_for(figure_id):
    try:
        return RECIPES[figure_id]
    except KeyError:
        raise KeyError(f"unknown figure id {figure_id!r}; expected one of "
                       f"{', '.join(sorted(RECIPES))}") from None

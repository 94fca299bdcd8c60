"""Offline figure rendering for fewlevel trajectory CSVs.

Reads the public CSV schema (time, populations, coherences, power,
currents, accumulators) and lays the columns out as figure panels. No
physics is computed here: every value in an image traces back to a CSV
cell.
"""

__version__ = "0.1.0"

from .recipes import RECIPES, FigureRecipe, recipe_for
from .render import RenderError, load_csv, render

__all__ = ["RECIPES", "FigureRecipe", "recipe_for", "RenderError",
           "load_csv", "render"]

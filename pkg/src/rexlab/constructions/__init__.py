"""Explicit graph families: extremal graphs, high-girth gadgets, blow-ups."""

from .bipartite import biregular_bipartite, k_regular_bipartite
from .blowups import blowup_cover, c5_blowup_regular, cycle_rich
from .families import (
    CyclePartition,
    apex_witness,
    clique_minus_matching,
    g_family,
    regex_tree_closed_form,
    rex_paths_closed_form,
    theorem6_extremal,
    turan_graph,
)
from .girth import DeficiencyPattern, deficient_high_girth, high_girth_feasibility, high_girth_regular
from .recipe import ConstructionRecipe, Family, build, manifest

__all__ = [
    "ConstructionRecipe",
    "CyclePartition",
    "DeficiencyPattern",
    "Family",
    "apex_witness",
    "biregular_bipartite",
    "blowup_cover",
    "build",
    "c5_blowup_regular",
    "clique_minus_matching",
    "cycle_rich",
    "deficient_high_girth",
    "g_family",
    "high_girth_feasibility",
    "high_girth_regular",
    "k_regular_bipartite",
    "manifest",
    "regex_tree_closed_form",
    "rex_paths_closed_form",
    "theorem6_extremal",
    "turan_graph",
]

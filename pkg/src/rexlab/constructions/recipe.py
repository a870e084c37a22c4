"""Declarative construction recipes and their JSON property manifests."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Optional

from ..errors import BadParams
from ..graph import Graph, complete_graph, cycle_graph, girth, is_regular, path_graph
from ..graph6 import graph6_encode
from ..patterns import contains, copies, exists_homomorphism, parse_pattern
from . import bipartite, blowups, families, girth as girth_mod


class Family(str, Enum):
    TURAN = "TURAN"
    CLIQUE_MINUS_MATCHING = "CLIQUE_MINUS_MATCHING"
    G_FAMILY = "G_FAMILY"
    THEOREM6 = "THEOREM6"
    C5_BLOWUP_REGULAR = "C5_BLOWUP_REGULAR"
    BIREGULAR_BIPARTITE = "BIREGULAR_BIPARTITE"
    HIGH_GIRTH_REGULAR = "HIGH_GIRTH_REGULAR"
    DEFICIENT_HIGH_GIRTH = "DEFICIENT_HIGH_GIRTH"
    BLOWUP_COVER = "BLOWUP_COVER"
    CYCLE_RICH = "CYCLE_RICH"
    APEX_WITNESS = "APEX_WITNESS"


# required params per family; BLOWUP_COVER takes pattern shorthands for h, f
REQUIRED = {
    Family.TURAN: ("n", "k"),
    Family.CLIQUE_MINUS_MATCHING: ("m",),
    Family.G_FAMILY: ("k",),
    Family.THEOREM6: ("n", "k"),
    Family.C5_BLOWUP_REGULAR: ("n", "d"),
    Family.BIREGULAR_BIPARTITE: ("a", "da", "b", "db"),
    Family.HIGH_GIRTH_REGULAR: ("n", "r", "g"),
    Family.DEFICIENT_HIGH_GIRTH: ("n", "r", "g", "i"),
    Family.BLOWUP_COVER: ("h", "f"),
    Family.CYCLE_RICH: ("m", "ell", "k"),
    Family.APEX_WITNESS: ("n",),
}

RANDOMIZED = {Family.C5_BLOWUP_REGULAR, Family.HIGH_GIRTH_REGULAR,
              Family.DEFICIENT_HIGH_GIRTH, Family.BLOWUP_COVER}


@dataclass(frozen=True)
class ConstructionRecipe:
    family: Family
    params: dict = field(default_factory=dict)
    seed: Optional[int] = None

    def __post_init__(self) -> None:
        try:
            fam = Family(self.family)
        except ValueError:
            raise BadParams(f"unknown family {self.family!r}") from None
        object.__setattr__(self, "family", fam)
        missing = [p for p in REQUIRED[fam] if p not in self.params]
        if missing:
            raise BadParams(f"{fam.value} needs params {missing}")

    def to_json(self) -> dict:
        return {"family": self.family.value, "params": dict(sorted(self.params.items())),
                "seed": self.seed}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, obj: dict) -> "ConstructionRecipe":
        if "family" not in obj:
            raise BadParams("recipe needs a family")
        return cls(obj["family"], dict(obj.get("params", {})), obj.get("seed"))

    @classmethod
    def loads(cls, text: str) -> "ConstructionRecipe":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise BadParams(f"recipe is not valid JSON: {exc}") from None
        if not isinstance(obj, dict):
            raise BadParams("recipe must be a JSON object")
        return cls.from_json(obj)


def build(recipe: ConstructionRecipe) -> list[Graph]:
    """All graphs the recipe describes (one, except for G_FAMILY)."""
    p = recipe.params
    seed = recipe.seed if recipe.seed is not None else 0
    fam = recipe.family
    if fam is Family.TURAN:
        return [families.turan_graph(p["n"], p["k"])]
    if fam is Family.CLIQUE_MINUS_MATCHING:
        return [families.clique_minus_matching(p["m"])]
    if fam is Family.G_FAMILY:
        return [g for _, g in families.g_family(p["k"])]
    if fam is Family.THEOREM6:
        return [families.theorem6_extremal(p["n"], p["k"], p.get("partition"))]
    if fam is Family.C5_BLOWUP_REGULAR:
        return [blowups.c5_blowup_regular(p["n"], p["d"], seed)]
    if fam is Family.BIREGULAR_BIPARTITE:
        return [bipartite.biregular_bipartite(p["a"], p["da"], p["b"], p["db"])]
    if fam is Family.HIGH_GIRTH_REGULAR:
        return [girth_mod.high_girth_regular(p["n"], p["r"], p["g"], seed)]
    if fam is Family.DEFICIENT_HIGH_GIRTH:
        pattern = girth_mod.DeficiencyPattern(p["i"], 1, p.get("dist", 1))
        return [girth_mod.deficient_high_girth(p["n"], p["r"], p["g"], pattern, seed)]
    if fam is Family.BLOWUP_COVER:
        h, f = parse_pattern(str(p["h"])), parse_pattern(str(p["f"]))
        return [blowups.blowup_cover(h, f, p.get("g", 7), seed)]
    if fam is Family.CYCLE_RICH:
        return [blowups.cycle_rich(p["m"], p["ell"], p["k"])]
    if fam is Family.APEX_WITNESS:
        return [families.apex_witness(p["n"])]
    raise BadParams(f"unhandled family {fam}")  # pragma: no cover


def _checks(recipe: ConstructionRecipe, g: Graph) -> dict[str, Any]:
    p = recipe.params
    fam = recipe.family
    out: dict[str, Any] = {}
    if fam is Family.THEOREM6:
        out[f"P{p['k']}_free"] = not contains(path_graph(p["k"]), g)
        out["closed_form"] = families.rex_paths_closed_form(p["n"], p["k"])
    elif fam is Family.G_FAMILY:
        out["closed_form"] = families.triangles_g_family(p["k"])
    elif fam is Family.C5_BLOWUP_REGULAR:
        out["K3_free"] = not contains(complete_graph(3), g)
    elif fam is Family.BLOWUP_COVER:
        f = parse_pattern(str(p["f"]))
        out["f_hom_free"] = not exists_homomorphism(f, g)
        # girth actually demanded of the gadgets (caller's g, raised past |V(f)|)
        out["gadget_girth"] = max(p.get("g", 7), f.order + 1)
    elif fam is Family.CYCLE_RICH:
        out[f"C{2 * p['k'] + 1}_free"] = not contains(cycle_graph(2 * p["k"] + 1), g)
        out[f"C{p['ell']}_copies"] = copies(cycle_graph(p["ell"]), g)
    elif fam is Family.APEX_WITNESS:
        apex = g.order - 1
        out["all_triangles_through_apex"] = not contains(complete_graph(3), _without(g, apex))
    return out


def _without(g: Graph, v: int) -> Graph:
    from ..graph import delete_vertex

    return delete_vertex(g, v)


def manifest(recipe: ConstructionRecipe, g: Graph) -> dict:
    return {
        "recipe": recipe.to_json(),
        "graph6": graph6_encode(g).decode("ascii"),
        "order": g.order,
        "edges": g.num_edges(),
        "degree": is_regular(g),
        "girth": girth(g),
        "triangles": copies(complete_graph(3), g),
        "checks": _checks(recipe, g),
    }

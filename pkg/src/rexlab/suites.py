"""Named verification suites: closed forms and constructions against the oracle.

Each suite returns a SuiteReport of check rows.  A row FAILs only on an
exact contradiction; small-n disagreement with an asymptotic statement or
a blown oracle budget is INCONCLUSIVE.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Any, Callable, Optional

from .constructions import (
    DeficiencyPattern,
    apex_witness,
    blowup_cover,
    c5_blowup_regular,
    clique_minus_matching,
    cycle_rich,
    deficient_high_girth,
    g_family,
    high_girth_regular,
    regex_tree_closed_form,
    rex_paths_closed_form,
    theorem6_extremal,
    turan_graph,
)
from .constructions.families import path_free_feasible, triangles_g_family
from .constructions.girth import deficient_vertices
from .graph import (
    BlowupSpec,
    Graph,
    blowup,
    bfs_distances,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    delete_vertex,
    disjoint_union,
    girth,
    is_regular,
    path_graph,
    uniform_blowup,
)
from .oracle.cache import RexCache
from .oracle.enumerate import all_graphs
from .oracle.rex import RexRecord, regex_brute, rex_brute, verify_uniqueness
from .patterns import c5_partition, contains, copies, exists_homomorphism, is_extended_friendship

PASS, FAIL, INCONCLUSIVE = "PASS", "FAIL", "INCONCLUSIVE"


@dataclass
class CheckRow:
    claim: str
    anchor: str
    expected: Any
    observed: Any
    status: str

    def to_json(self) -> dict:
        return {"claim": self.claim, "anchor": self.anchor, "expected": self.expected,
                "observed": self.observed, "status": self.status}


@dataclass
class SuiteReport:
    name: str
    rows: list[CheckRow] = field(default_factory=list)
    work: dict = field(default_factory=dict)

    def add(self, claim: str, anchor: str, expected: Any, observed: Any,
            status: Optional[str] = None) -> CheckRow:
        if status is None:
            status = PASS if expected == observed else FAIL
        row = CheckRow(claim, anchor, expected, observed, status)
        self.rows.append(row)
        return row

    def totals(self) -> dict:
        out = {PASS: 0, FAIL: 0, INCONCLUSIVE: 0}
        for r in self.rows:
            out[r.status] += 1
        return out

    @property
    def ok(self) -> bool:
        return self.totals()[FAIL] == 0

    def to_json(self) -> dict:
        return {"suite": self.name, "rows": [r.to_json() for r in self.rows],
                "totals": self.totals(), "work": self.work}

    def table(self) -> str:
        lines = [f"suite {self.name}"]
        w = max([len(r.claim) for r in self.rows] + [5])
        for r in self.rows:
            lines.append(f"  {r.status:<12} {r.claim:<{w}}  expected={r.expected!r} "
                         f"observed={r.observed!r}  [{r.anchor}]")
        t = self.totals()
        lines.append(f"  totals: {t[PASS]} pass, {t[FAIL]} fail, {t[INCONCLUSIVE]} inconclusive")
        return "\n".join(lines)


@dataclass
class SuiteContext:
    budget: Optional[int] = None
    jobs: int = 1
    seed: int = 0
    cache: Optional[RexCache] = None

    def rex(self, n: int, h: Graph, f: Graph, r_filter: Optional[int] = None) -> RexRecord:
        key = None
        if self.cache is not None:
            from .canon import canonical_form

            key = (n, canonical_form(h).key(), canonical_form(f).key(), r_filter)
            hit = self.cache.lookup(key)
            if hit is not None:
                return hit
        rec = rex_brute(n, h, f, r_filter, budget=self.budget, jobs=self.jobs)
        if self.cache is not None and rec.exhaustive:
            self.cache.store(rec)
        return rec

    def finding(self, **kw) -> None:
        if self.cache is not None:
            self.cache.log_finding(kw)


K3 = complete_graph(3)


# ------------------------------------------------------------------ suites

def suite_paths(ctx: SuiteContext, k: int = 7, n_max: int = 13, n_min: int = 1) -> SuiteReport:
    rep = SuiteReport("paths")
    pk = path_graph(k)
    for n in range(n_min, n_max + 1):
        if not path_free_feasible(n, k):
            continue
        ext = theorem6_extremal(n, k)
        value = rex_paths_closed_form(n, k)
        rep.add(f"closed form = triangles in extremal graph (n={n}, k={k})",
                "paths/construction", value, copies(K3, ext))
        rep.add(f"extremal graph is P{k}-free and regular (n={n})", "paths/construction",
                True, (not contains(pk, ext)) and is_regular(ext) is not None)
        rec = ctx.rex(n, K3, pk)
        if not rec.exhaustive:
            rep.add(f"oracle rex(n={n}, K3, P{k})", "paths/oracle", value, None, INCONCLUSIVE)
            continue
        observed = (rec.best_value, verify_uniqueness(rec, ext))
        status = PASS if observed == (value, True) else INCONCLUSIVE
        if status != PASS:
            ctx.finding(suite="paths", n=n, k=k, closed_form=value, oracle=rec.best_value,
                        unique=observed[1])
        rep.add(f"oracle rex(n={n}, K3, P{k}) and uniqueness", "paths/oracle",
                (value, True), observed, status)
    return rep


def suite_families(ctx: SuiteContext, k_max: int = 14) -> SuiteReport:
    rep = SuiteReport("families")
    for k in range(7, k_max + 1):
        if k % 2:
            expected = 8 * comb((k - 1) // 2, 3)
            rep.add(f"K3 in K{k - 1} minus matching (k={k})", "families/clique-minus-matching-odd",
                    expected, copies(K3, clique_minus_matching(k - 1)))
        else:
            expected = 8 * comb(k // 2 - 1, 3)
            rep.add(f"K3 in K{k - 2} minus matching (k={k})", "families/clique-minus-matching-even",
                    expected, copies(K3, clique_minus_matching(k - 2)))
            members = g_family(k)
            counts = sorted({copies(K3, g) for _, g in members})
            rep.add(f"K3 in every K{k - 1} minus 2-factor ({len(members)} members)",
                    "families/minus-two-factor", [triangles_g_family(k)], counts)
            rep.add(f"members are (k-4)-regular (k={k})", "families/minus-two-factor",
                    {k - 4}, {is_regular(g) for _, g in members})
    return rep


def _corpus(max_order: int) -> list[Graph]:
    return [g for n in range(1, max_order + 1) for g in all_graphs(n)]


COVER_PAIRS = (("P3", "K3", 7), ("K3", "K4", 7), ("K2", "K3", 5))


def suite_dichotomy_blowup(ctx: SuiteContext, max_order: int = 5) -> SuiteReport:
    from .patterns import parse_pattern

    rep = SuiteReport("dichotomy-blowup")
    corpus = _corpus(max_order)
    disagree = 0
    total = 0
    for h in corpus:
        for f in corpus:
            total += 1
            hom = exists_homomorphism(f, h)
            sub = contains(f, uniform_blowup(h, f.order))
            if hom != sub:
                disagree += 1
    rep.add(f"homomorphism <=> subgraph of blow-up ({total} pairs, order <= {max_order})",
            "dichotomy-blowup/homomorphism-test", 0, disagree)
    for hs, fs, g in COVER_PAIRS:
        h, f = parse_pattern(hs), parse_pattern(fs)
        cover = blowup_cover(h, f, g, ctx.seed)
        r = is_regular(cover)
        rep.add(f"cover({hs}, {fs}, g={g}) regular of degree 2*Delta+1", "dichotomy-blowup/cover",
                2 * max(h.degree(v) for v in range(h.order)) + 1, r)
        rep.add(f"cover({hs}, {fs}) has no homomorphic image of {fs}", "dichotomy-blowup/cover",
                False, exists_homomorphism(f, cover))
        big = uniform_blowup(cover, 3)
        rep.add(f"blow-up of cover({hs}, {fs}) by 3 is {fs}-free", "dichotomy-blowup/cover",
                False, contains(f, big))
    return rep


def bowtie() -> Graph:
    return Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


def friendship_with_pendants() -> Graph:
    # F2 (bowtie) with a pendant path on a triangle vertex and a pendant star on the centre
    edges = [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4), (1, 5), (5, 6), (0, 7), (0, 8)]
    return Graph.from_edges(9, edges)


def suite_dichotomy_friendship(ctx: SuiteContext, orders=(11, 16, 26)) -> SuiteReport:
    rep = SuiteReport("dichotomy-friendship")
    named = {
        "bowtie": (bowtie(), True),
        "2K3": (disjoint_union([K3, K3]), False),
        "C4": (cycle_graph(4), False),
        "F2 plus pendant trees": (friendship_with_pendants(), True),
    }
    for name, (g, want) in named.items():
        rep.add(f"extended friendship: {name}", "dichotomy-friendship/recognizer",
                want, is_extended_friendship(g))
    for n in orders:
        g = apex_witness(n)
        r = 2 * (n - 1) // 5
        rep.add(f"apex witness n={n} regularity", "dichotomy-friendship/apex", r, is_regular(g))
        rep.add(f"apex witness n={n} triangles", "dichotomy-friendship/apex",
                r * r // 4 - r // 2, copies(K3, g))
        rep.add(f"apex witness n={n} every triangle uses the apex", "dichotomy-friendship/apex",
                False, contains(K3, delete_vertex(g, n - 1)))
    return rep


def suite_cycle_rich(ctx: SuiteContext, cases=((3, 5, 3),)) -> SuiteReport:
    rep = SuiteReport("cycle-rich")
    for m, ell, k in cases:
        g = cycle_rich(m, ell, k)
        rep.add(f"cycle_rich({m},{ell},{k}) regularity", "cycle-rich/construction", 2 * m, is_regular(g))
        rep.add(f"cycle_rich({m},{ell},{k}) has no C{2 * k + 1}", "cycle-rich/construction",
                False, contains(cycle_graph(2 * k + 1), g))
        c = copies(cycle_graph(ell), g)
        rep.add(f"cycle_rich({m},{ell},{k}) C{ell} copies >= {m ** ((ell - 1) // 2)}",
                "cycle-rich/construction", True, c >= m ** ((ell - 1) // 2))
    return rep


def suite_turan_regular(ctx: SuiteContext, n: int = 9, n_bip: int = 8) -> SuiteReport:
    rep = SuiteReport("turan-regular")
    if n % 3 == 0:
        t = turan_graph(n, 3)
        rec = ctx.rex(n, K3, complete_graph(4))
        if rec.exhaustive:
            rep.add(f"rex({n}, K3, K4) = triangles in T({n},3), unique", "turan-regular/complete-partite",
                    (copies(K3, t), True), (rec.best_value, verify_uniqueness(rec, t)))
        else:
            rep.add(f"rex({n}, K3, K4)", "turan-regular/complete-partite", copies(K3, t), None, INCONCLUSIVE)
    if n_bip % 2 == 0:
        t2 = complete_multipartite([n_bip // 2, n_bip // 2])
        c4 = cycle_graph(4)
        rec = ctx.rex(n_bip, c4, K3)
        if rec.exhaustive:
            rep.add(f"rex({n_bip}, C4, K3) = C4 in T({n_bip},2), unique", "turan-regular/bipartite",
                    (copies(c4, t2), True), (rec.best_value, verify_uniqueness(rec, t2)))
        else:
            rep.add(f"rex({n_bip}, C4, K3)", "turan-regular/bipartite", copies(c4, t2), None, INCONCLUSIVE)
    return rep


REGEX_CASES = ((7, 11), (7, 12), (5, 8))


def suite_regex_trees(ctx: SuiteContext, cases=REGEX_CASES) -> SuiteReport:
    rep = SuiteReport("regex-trees")
    for t, n in cases:
        tree = path_graph(t)
        expected = regex_tree_closed_form(tree, n)
        res = regex_brute(n, tree, budget=ctx.budget, jobs=ctx.jobs)
        if not res.exhaustive:
            rep.add(f"regex({n}, P{t})", "regex-trees/oracle", expected, None, INCONCLUSIVE)
            continue
        status = PASS if res.degree == expected else INCONCLUSIVE
        if status != PASS:
            ctx.finding(suite="regex-trees", n=n, t=t, closed_form=expected, oracle=res.degree)
        rep.add(f"regex({n}, P{t})", "regex-trees/oracle", expected, res.degree, status)
        rep.add(f"regex({n}, P{t}) <= t-2", "regex-trees/ceiling", True, res.degree <= t - 2)
    return rep


C5_GRID = ((25, 10), (5, 2), (15, 6))


def suite_c5_stability(ctx: SuiteContext, grid=C5_GRID) -> SuiteReport:
    rep = SuiteReport("c5-stability")
    for n, d in grid:
        g = c5_blowup_regular(n, d, ctx.seed)
        rep.add(f"c5_blowup_regular({n},{d}) regular, triangle-free", "c5-stability/construction",
                (d, False), (is_regular(g), contains(K3, g)))
        part = c5_partition(g)
        rep.add(f"c5_partition({n},{d}) recovers classes with empty leftover", "c5-stability/partition",
                (sorted(len(p) for p in g.parts), 0),
                (sorted(len(c) for c in part.classes), len(part.leftover)))
    return rep


HIGH_GIRTH_GRID = ((10, 3, 5), (16, 3, 5), (12, 2, 6), (20, 3, 6), (24, 3, 7))
DEFICIENT_GRID = ((10, 3, 5, 0, 1), (10, 3, 5, 2, 4), (20, 3, 5, 2, 4), (169, 5, 7, 3, 4))


def suite_high_girth(ctx: SuiteContext) -> SuiteReport:
    rep = SuiteReport("high-girth")
    for n, r, g in HIGH_GIRTH_GRID:
        out = high_girth_regular(n, r, g, ctx.seed)
        gg = girth(out)
        rep.add(f"high_girth_regular({n},{r},{g})", "high-girth/regular",
                (n, r, True), (out.order, is_regular(out), gg is None or gg >= g))
    for n, r, g, i, dist in DEFICIENT_GRID:
        out = deficient_high_girth(n, r, g, DeficiencyPattern(i, 1, dist), ctx.seed)
        low = deficient_vertices(out, r)
        closest = min((bfs_distances(out, a)[b] or 10**9 for a in low for b in low if a < b),
                      default=None)
        gg = girth(out)
        rep.add(f"deficient_high_girth({n},{r},{g}, i={i}, dist={dist})", "high-girth/deficient",
                (i, True, True),
                (len(low), gg is None or gg >= g, closest is None or closest >= dist))
    return rep


SUITES: dict[str, Callable[..., SuiteReport]] = {
    "paths": suite_paths,
    "families": suite_families,
    "dichotomy-blowup": suite_dichotomy_blowup,
    "dichotomy-friendship": suite_dichotomy_friendship,
    "cycle-rich": suite_cycle_rich,
    "turan-regular": suite_turan_regular,
    "regex-trees": suite_regex_trees,
    "c5-stability": suite_c5_stability,
    "high-girth": suite_high_girth,
}

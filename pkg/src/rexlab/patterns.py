"""Copy counting, containment, homomorphism tests and structure recognisers.

All embedding searches share one backtracking engine: pattern vertices are
placed in a connectivity-respecting order and the candidate set of the next
vertex is the intersection of the host neighbourhoods of its already placed
neighbours.  A walk filter adds a cheap lookahead: if pattern vertices ``x``
and ``w`` are at distance ``d``, the image of ``w`` must be reachable from the
image of ``x`` by a host walk of length exactly ``d``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import perm as falling
from typing import Optional

import networkx as nx

from .canon import CanonicalForm, canonical_form
from .errors import (
    BadParams,
    Bipartite,
    DegreeTooLow,
    NotRegular,
    NotTriangleFree,
    ShortestOddCycleTooLong,
    StructureViolation,
)
from .graph import (
    Graph,
    bfs_distances,
    bits,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    is_connected,
    is_regular,
    odd_cycle,
    path_graph,
)


@dataclass
class CountReport:
    pattern_canon: CanonicalForm
    host_order: int
    copies: int
    labeled_copies: int
    nodes_explored: int = 0

    def to_json(self) -> dict:
        return {
            "pattern": self.pattern_canon.to_json(),
            "host_order": self.host_order,
            "copies": self.copies,
            "labeled_copies": self.labeled_copies,
            "nodes_explored": self.nodes_explored,
        }


@dataclass(frozen=True)
class C5Partition:
    classes: tuple[frozenset, ...]
    leftover: frozenset
    cycle: tuple[int, ...]


# ------------------------------------------------------------ search engine

@dataclass
class _Plan:
    order: list[int]  # pattern vertices to place, isolated ones excluded
    back: list[list[int]]  # for each position, earlier positions adjacent to it
    walks: list[list[tuple[int, int]]]  # (earlier position, distance >= 2)
    isolated: int
    max_dist: int


def _plan(h: Graph, use_walks: bool) -> _Plan:
    n = h.order
    deg = [h.degree(v) for v in range(n)]
    placed: list[int] = []
    pos = {}
    remaining = {v for v in range(n) if deg[v] > 0}
    while remaining:
        best = None
        for v in sorted(remaining):
            k = sum(1 for u in placed if h.has_edge(u, v))
            key = (k, deg[v])
            if best is None or key > best[0]:
                best = (key, v)
        v = best[1]
        pos[v] = len(placed)
        placed.append(v)
        remaining.discard(v)
    back = [[pos[u] for u in bits(h.adj[v]) if u in pos and pos[u] < pos[v]] for v in placed]
    walks: list[list[tuple[int, int]]] = [[] for _ in placed]
    max_dist = 1
    if use_walks:
        for i, v in enumerate(placed):
            dist = bfs_distances(h, v)
            for j in range(i):
                d = dist[placed[j]]
                if d is not None and d >= 2:
                    walks[i].append((j, d))
                    max_dist = max(max_dist, d)
    isolated = n - len(placed)
    return _Plan(placed, back, walks, isolated, max_dist)


class _WalkTable:
    """``table[d][v]``: host vertices reachable from ``v`` by a walk of length ``d``."""

    def __init__(self, g: Graph):
        self.g = g
        self.levels: list[list[int]] = [[1 << v for v in range(g.order)], list(g.adj)]

    def get(self, d: int) -> list[int]:
        adj = self.g.adj
        while len(self.levels) <= d:
            prev = self.levels[-1]
            nxt = []
            for v in range(self.g.order):
                m = 0
                for u in bits(adj[v]):
                    m |= prev[u]
                nxt.append(m)
            self.levels.append(nxt)
        return self.levels[d]


@dataclass
class _Counter:
    nodes: int = 0
    limit: Optional[int] = None


def _walk_filter_pays(h: Graph, g: Graph, plan: _Plan) -> bool:
    return plan.max_dist >= 2 and g.order > 8


def _embed(h: Graph, g: Graph, *, injective: bool, stop_at_first: bool,
           counter: _Counter, use_walks: Optional[bool] = None) -> int:
    """Count (or detect) edge-preserving maps of the non-isolated part of ``h``."""
    plan = _plan(h, True if use_walks is None else use_walks)
    if use_walks is None and not _walk_filter_pays(h, g, plan):
        plan.walks = [[] for _ in plan.order]
    k = len(plan.order)
    if k == 0:
        return 1
    if injective and k > g.order:
        return 0
    table = _WalkTable(g) if any(plan.walks) else None
    walk_levels = {}
    if table is not None:
        for w in plan.walks:
            for _, d in w:
                if d not in walk_levels:
                    walk_levels[d] = table.get(d)
    adj = g.adj
    full = (1 << g.order) - 1
    image = [0] * k
    back = plan.back
    walks = plan.walks
    last = k - 1

    def candidates(i: int, used: int) -> int:
        c = full
        for j in back[i]:
            c &= adj[image[j]]
        for j, d in walks[i]:
            c &= walk_levels[d][image[j]]
        if injective:
            c &= ~used
        return c

    def rec(i: int, used: int) -> int:
        counter.nodes += 1
        c = candidates(i, used)
        if i == last:
            return 1 if (stop_at_first and c) else c.bit_count()
        total = 0
        for x in bits(c):
            image[i] = x
            total += rec(i + 1, used | (1 << x))
            if stop_at_first and total:
                return total
        return total

    return rec(0, 0)


# -------------------------------------------------------------- operations

def count_injective_homs(h: Graph, g: Graph, counter: Optional[_Counter] = None) -> int:
    """Number of injections V(h) -> V(g) sending every edge of h to an edge of g."""
    counter = counter or _Counter()
    plan_iso = h.order - sum(1 for v in range(h.order) if h.adj[v])
    if h.order > g.order:
        return 0
    core = _embed(h, g, injective=True, stop_at_first=False, counter=counter)
    if plan_iso == 0:
        return core
    placed = h.order - plan_iso
    return core * falling(g.order - placed, plan_iso)


def automorphism_count(h: Graph) -> int:
    """|Aut(h)| by direct backtracking over adjacency- and non-adjacency-preserving maps."""
    n = h.order
    if n == 0:
        return 1
    full = (1 << n) - 1
    deg = [h.degree(v) for v in range(n)]
    by_deg: dict[int, int] = {}
    for v in range(n):
        by_deg[deg[v]] = by_deg.get(deg[v], 0) | (1 << v)
    plan = _plan(h, False)
    order = plan.order + [v for v in range(n) if not h.adj[v]]
    image = [0] * n

    def rec(i: int, used: int) -> int:
        if i == n:
            return 1
        v = order[i]
        c = by_deg[deg[v]] & ~used
        for j in range(i):
            u = order[j]
            if h.adj[v] >> u & 1:
                c &= h.adj[image[u]]
            else:
                c &= full & ~h.adj[image[u]]
        total = 0
        for x in bits(c):
            image[v] = x
            total += rec(i + 1, used | (1 << x))
        return total

    return rec(0, 0)


def count_copies(h: Graph, g: Graph) -> CountReport:
    """Number of (not necessarily induced) copies of ``h`` in ``g``."""
    counter = _Counter()
    labeled = count_injective_homs(h, g, counter)
    aut = automorphism_count(h)
    canon = canonical_form(h)
    if labeled % aut:
        raise AssertionError("labeled copy count not divisible by |Aut(h)|")
    return CountReport(canon, g.order, labeled // aut, labeled, counter.nodes)


def copies(h: Graph, g: Graph) -> int:
    return count_injective_homs(h, g) // automorphism_count(h)


def contains(f: Graph, g: Graph) -> bool:
    """True iff ``g`` has a subgraph isomorphic to ``f``; stops at the first hit."""
    if f.order > g.order:
        return False
    if f.num_edges() > g.num_edges():
        return False
    return _embed(f, g, injective=True, stop_at_first=True, counter=_Counter()) > 0


def exists_homomorphism(f: Graph, h: Graph) -> bool:
    """True iff an edge-preserving map V(f) -> V(h) exists.

    Equivalently ``f`` is a subgraph of some blow-up of ``h``.
    """
    if f.order == 0:
        return True
    if h.order == 0:
        return False
    return _embed(f, h, injective=False, stop_at_first=True, counter=_Counter()) > 0


def is_extended_friendship(f: Graph) -> bool:
    """Every block is an edge or a triangle, and all triangles share a vertex."""
    nxg = to_networkx(f)
    triangles = []
    for block in nx.biconnected_components(nxg):
        if len(block) == 2:
            continue
        if len(block) != 3:
            return False
        triangles.append(frozenset(block))
    if len(triangles) <= 1:
        return True
    common = frozenset.intersection(*triangles)
    return len(common) >= 1


def c5_partition(g: Graph, eps: Fraction = Fraction(1, 20)) -> C5Partition:
    """Split a dense regular triangle-free non-bipartite graph along a 5-cycle.

    Anchor ``v_i`` of a shortest odd cycle belongs to class ``V_i``; any other
    vertex adjacent to exactly ``v_i`` and ``v_{i+2}`` on the cycle goes to
    ``V_{i+1}``; everything else lands in ``leftover``.
    """
    if contains(complete_graph(3), g):
        raise NotTriangleFree("graph contains a triangle")
    d = is_regular(g)
    if d is None:
        raise NotRegular("graph is not regular")
    cyc = odd_cycle(g)
    if cyc is None:
        raise Bipartite("graph is bipartite")
    n = g.order
    if Fraction(d) < (Fraction(2, 5) - Fraction(eps)) * n:
        raise DegreeTooLow(f"degree {d} below (2/5 - {eps})*{n}")
    if len(cyc) != 5:
        raise ShortestOddCycleTooLong(f"shortest odd cycle has length {len(cyc)}")
    on_cycle = {v: i for i, v in enumerate(cyc)}
    classes: list[set[int]] = [{cyc[i]} for i in range(5)]
    leftover: set[int] = set()
    cyc_mask = 0
    for v in cyc:
        cyc_mask |= 1 << v
    for x in range(n):
        if x in on_cycle:
            continue
        hits = sorted(on_cycle[v] for v in bits(g.adj[x] & cyc_mask))
        placed = False
        if len(hits) == 2:
            a, b = hits
            for i in range(5):
                if {a, b} == {i, (i + 2) % 5}:
                    classes[(i + 1) % 5].add(x)
                    placed = True
                    break
        if not placed:
            leftover.add(x)
    masks = []
    for c in classes:
        m = 0
        for v in c:
            m |= 1 << v
        masks.append(m)
    for i in range(5):
        for v in classes[i]:
            if g.adj[v] & masks[i]:
                raise StructureViolation(f"class {i} is not independent")
            if g.adj[v] & (masks[(i + 2) % 5] | masks[(i + 3) % 5]):
                raise StructureViolation(f"edge from class {i} to a non-consecutive class")
    return C5Partition(tuple(frozenset(c) for c in classes), frozenset(leftover), tuple(cyc))


def erdos_gallai_path_check(g: Graph, k: int) -> bool:
    """False only on a counterexample to: connected, order >= k, min degree >= k//2 => P_k."""
    if g.order == 0:
        return True
    premise = is_connected(g) and g.order >= k and min(g.degree(v) for v in range(g.order)) >= k // 2
    if not premise:
        return True
    return contains(path_graph(k), g)


# ---------------------------------------------------------------- helpers

def to_networkx(g: Graph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(range(g.order))
    out.add_edges_from(g.edges())
    return out


_SHORTHAND = re.compile(r"^([KPC])(\d+(?:,\d+)*)$")


def parse_pattern(token: str) -> Graph:
    """Parse ``K5``, ``P7``, ``C6``, ``K3,3`` or ``K2,2,2``."""
    m = _SHORTHAND.match(token.strip())
    if not m:
        raise BadParams(f"not a pattern shorthand: {token!r}")
    kind, nums = m.group(1), [int(x) for x in m.group(2).split(",")]
    if kind == "K":
        if len(nums) == 1:
            return complete_graph(nums[0])
        return complete_multipartite(nums)
    if len(nums) != 1:
        raise BadParams(f"{kind} takes a single size: {token!r}")
    if kind == "P":
        return path_graph(nums[0])
    return cycle_graph(nums[0])

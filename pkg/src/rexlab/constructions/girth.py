"""Regular graphs of large girth, with and without deficient vertices.

Strategy for an r-regular n-vertex graph of girth >= g:

1. rule out what is provably impossible (parity, r >= n, the Moore bound);
2. exact hit in a library of named graphs and incidence geometries
   (generalized Petersen graphs are tried on the fly for r = 3);
3. write n as a sum of orders of library graphs and their one-hub /
   two-hub gluings (each gluing removes one edge per copy and joins the
   endpoints to new hub vertices, which keeps the girth);
4. seeded edge-swap hill climbing, budgeted; failure there raises
   SearchExhausted, never Infeasible.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional

from ..errors import Infeasible, ParityInfeasible, SearchExhausted, BadParams
from ..graph import (
    Graph,
    bfs_distances,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    degree_sequence,
    delete_vertex,
    disjoint_union,
    empty_graph,
    girth,
    is_regular,
)
from .fields import SUPPORTED_Q, gq_incidence_edges, pg2_incidence_edges

DEFAULT_SWAP_BUDGET = 10**6


def lcf_graph(n: int, jumps: list[int], repeats: int) -> Graph:
    seq = jumps * repeats
    if len(seq) != n:
        raise BadParams("LCF sequence length must equal n")
    edges = {(min(i, (i + 1) % n), max(i, (i + 1) % n)) for i in range(n)}
    for i, j in enumerate(seq):
        u, v = i, (i + j) % n
        edges.add((min(u, v), max(u, v)))
    return Graph.from_edges(n, sorted(edges))


def generalized_petersen(m: int, k: int) -> Graph:
    edges = []
    for i in range(m):
        edges.append((i, (i + 1) % m))
        edges.append((i, m + i))
        edges.append((m + i, m + (i + k) % m))
    return Graph.from_edges(2 * m, {(min(u, v), max(u, v)) for u, v in edges})


def petersen_graph() -> Graph:
    return generalized_petersen(5, 2)


# The (4,5)-cage on 19 vertices; it is unique, so this is the Robertson graph.
_ROBERTSON_EDGES = (
    (0, 2), (0, 4), (0, 8), (0, 10), (1, 2), (1, 3), (1, 6), (1, 12), (2, 7), (2, 13),
    (3, 4), (3, 15), (3, 16), (4, 14), (4, 18), (5, 8), (5, 12), (5, 16), (5, 17),
    (6, 8), (6, 11), (6, 14), (7, 9), (7, 14), (7, 16), (8, 9), (9, 15), (9, 18),
    (10, 11), (10, 12), (10, 15), (11, 13), (11, 16), (12, 18), (13, 17), (13, 18),
    (14, 17), (15, 17),
)


def robertson_graph() -> Graph:
    return Graph.from_edges(19, _ROBERTSON_EDGES)


@dataclass(frozen=True)
class LibraryEntry:
    name: str
    order: int
    degree: int
    girth: int
    build: Callable[[], Graph]


def _incidence(builder, q):
    def build():
        n, edges = builder(q)
        return Graph.from_edges(n, edges)
    return build


def _library() -> list[LibraryEntry]:
    out = [
        LibraryEntry("petersen", 10, 3, 5, petersen_graph),
        LibraryEntry("heawood", 14, 3, 6, lambda: lcf_graph(14, [5, -5], 7)),
        LibraryEntry("mobius-kantor", 16, 3, 6, lambda: lcf_graph(16, [5, -5], 8)),
        LibraryEntry("dodecahedron", 20, 3, 5, lambda: generalized_petersen(10, 2)),
        LibraryEntry("desargues", 20, 3, 6, lambda: generalized_petersen(10, 3)),
        LibraryEntry("mcgee", 24, 3, 7, lambda: lcf_graph(24, [12, 7, -7], 8)),
        LibraryEntry("tutte-coxeter", 30, 3, 8,
                     lambda: lcf_graph(30, [-13, -9, 7, -7, 9, 13], 5)),
        LibraryEntry("robertson", 19, 4, 5, robertson_graph),
    ]
    for q in SUPPORTED_Q:
        n = 2 * (q * q + q + 1)
        out.append(LibraryEntry(f"pg2-{q}", n, q + 1, 6, _incidence(pg2_incidence_edges, q)))
    for q in (2, 3, 4, 5):
        n = 2 * (q + 1) * (q * q + 1)
        out.append(LibraryEntry(f"gq-{q}", n, q + 1, 8, _incidence(gq_incidence_edges, q)))
    return out


LIBRARY = _library()


@lru_cache(maxsize=None)
def _build_entry(name: str) -> Graph:
    entry = next(e for e in LIBRARY if e.name == name)
    return entry.build()


def moore_bound(r: int, g: int) -> int:
    """Fewest vertices an r-regular graph of girth >= g can have (r >= 2)."""
    if g <= 3:
        return r + 1
    if g % 2 == 1:
        d = (g - 1) // 2
        return 1 + r * sum((r - 1) ** i for i in range(d))
    d = g // 2
    return 2 * sum((r - 1) ** i for i in range(d))


def _basic_blocks(r: int, g: int) -> list[tuple[int, str]]:
    """Library graphs usable as-is: (order, name)."""
    blocks = []
    if r >= 2 and g <= 3:
        blocks.append((r + 1, "complete"))
    if r >= 1 and g <= 4:
        blocks.append((2 * r, "complete-bipartite"))
    for e in LIBRARY:
        if e.degree == r and e.girth >= g:
            blocks.append((e.order, e.name))
    return sorted(set(blocks))


def _block_graph(name: str, r: int) -> Graph:
    if name == "complete":
        return complete_graph(r + 1)
    if name == "complete-bipartite":
        return complete_multipartite([r, r])
    return _build_entry(name)


def _glue(base: Graph, r: int) -> Graph:
    """Copies of ``base`` minus an edge, endpoints joined to one or two hubs."""
    u, v = base.edges()[0]
    m = base.order
    copies = r // 2 if r % 2 == 0 else r
    adj: list[int] = []
    for c in range(copies):
        shift = c * m
        for w, nb in enumerate(base.adj):
            if w == u:
                nb &= ~(1 << v)
            elif w == v:
                nb &= ~(1 << u)
            adj.append(nb << shift)
    hubs = [len(adj)] if r % 2 == 0 else [len(adj), len(adj) + 1]
    adj.extend(0 for _ in hubs)
    for c in range(copies):
        a, b = c * m + u, c * m + v
        ha, hb = hubs[0], hubs[-1]
        adj[a] |= 1 << ha
        adj[ha] |= 1 << a
        adj[b] |= 1 << hb
        adj[hb] |= 1 << b
    return Graph.trusted(adj)


def _glued_order(m: int, r: int) -> int:
    return r * m // 2 + 1 if r % 2 == 0 else r * m + 2


def _blocks(r: int, g: int) -> list[tuple[int, str, bool]]:
    """(order, library name, glued?) for every block of degree r, girth >= g."""
    out = []
    for m, name in _basic_blocks(r, g):
        out.append((m, name, False))
        if r >= 2:
            out.append((_glued_order(m, r), name, True))
    return sorted(set(out))


def _combination(n: int, blocks: list[tuple[int, str, bool]]) -> Optional[list[tuple[int, str, bool]]]:
    """Fewest blocks whose orders sum to n (unbounded knapsack)."""
    if n == 0:
        return []
    best: list[Optional[tuple[int, int]]] = [None] * (n + 1)
    best[0] = (0, -1)
    for total in range(1, n + 1):
        for idx, (m, _, _) in enumerate(blocks):
            if m <= total and best[total - m] is not None:
                cand = best[total - m][0] + 1
                if best[total] is None or cand < best[total][0]:
                    best[total] = (cand, idx)
    if best[n] is None:
        return None
    pieces = []
    total = n
    while total:
        idx = best[total][1]
        pieces.append(blocks[idx])
        total -= blocks[idx][0]
    return sorted(pieces)


def _gp_hit(n: int, g: int) -> Optional[Graph]:
    if n % 2 or n < 10:
        return None
    m = n // 2
    for k in range(2, (m - 1) // 2 + 1):
        gp = generalized_petersen(m, k)
        gg = girth(gp, limit=g - 1)
        if gg is None or gg >= g:
            return gp
    return None


def _check_basic(n: int, r: int, g: int) -> None:
    if n < 0 or r < 0:
        raise BadParams("n and r must be non-negative")
    if (n * r) % 2:
        raise ParityInfeasible(f"n*r = {n * r} is odd")
    if r >= n and not (r == 0 and n == 0):
        raise Infeasible(f"no {r}-regular graph on {n} vertices")
    if r >= 2 and n < moore_bound(r, g):
        raise Infeasible(f"n={n} is below the Moore bound {moore_bound(r, g)} for r={r}, g={g}")


def constructive(n: int, r: int, g: int) -> Optional[Graph]:
    """Deterministic construction without random search, or None."""
    if r == 0:
        return empty_graph(n)
    if r == 1:
        return Graph.from_edges(n, [(i, i + 1) for i in range(0, n, 2)])
    if r == 2:
        return cycle_graph(n) if n >= max(g, 3) else None
    for e in LIBRARY:
        if e.degree == r and e.order == n and e.girth >= g:
            return _build_entry(e.name)
    if r == 3:
        hit = _gp_hit(n, g)
        if hit is not None:
            return hit
    pieces = _combination(n, _blocks(r, g))
    if pieces is None:
        return None
    graphs = []
    for _, name, glued in pieces:
        base = _block_graph(name, r)
        graphs.append(_glue(base, r) if glued else base)
    return disjoint_union(graphs)


def high_girth_feasibility(n: int, r: int, g: int) -> str:
    """"infeasible", "constructive" (library/gluing) or "search"."""
    try:
        _check_basic(n, r, g)
    except Infeasible:
        return "infeasible"
    if r == 2 and n < g:
        return "infeasible"
    return "constructive" if constructive(n, r, g) is not None else "search"


def constructive_orders(r: int, g: int, limit: int) -> list[int]:
    """Orders n <= limit for which ``constructive`` succeeds (GP hits aside)."""
    blocks = _blocks(r, g)
    reach = [False] * (limit + 1)
    reach[0] = True
    for total in range(1, limit + 1):
        reach[total] = any(m <= total and reach[total - m] for m, _, _ in blocks)
    return [n for n in range(1, limit + 1) if reach[n]]


# ------------------------------------------------------------ random search

class _SwapSearch:
    """Double-edge swaps that never increase the number of short edges.

    An edge uv is short when u and v are joined by another path of length
    at most g-2, i.e. uv lies on a cycle shorter than g.
    """

    def __init__(self, n: int, r: int, g: int, rng: random.Random):
        self.n, self.r, self.g = n, r, g
        self.rng = rng
        self.nb = [set() for _ in range(n)]
        for i in range(n):
            for j in range(1, r // 2 + 1):
                self._link(i, (i + j) % n)
        if r % 2:
            for i in range(n // 2):
                self._link(i, i + n // 2)
        # scramble before climbing
        edges = self.edge_list()
        for _ in range(10 * len(edges)):
            self._random_swap(force=True)
        self.short = {e for e in self.edge_list() if self._is_short(*e)}

    def _link(self, u, v):
        self.nb[u].add(v)
        self.nb[v].add(u)

    def _unlink(self, u, v):
        self.nb[u].discard(v)
        self.nb[v].discard(u)

    def edge_list(self):
        return [(u, v) for u in range(self.n) for v in self.nb[u] if u < v]

    def _is_short(self, u, v) -> bool:
        limit = self.g - 2
        if limit < 1:
            return False
        seen = {u: 0}
        queue = deque([u])
        while queue:
            x = queue.popleft()
            d = seen[x]
            if d == limit:
                continue
            for y in self.nb[x]:
                if x == u and y == v:
                    continue
                if y == v:
                    return True
                if y not in seen:
                    seen[y] = d + 1
                    queue.append(y)
        return False

    def _near(self, sources, radius):
        seen = set(sources)
        frontier = list(sources)
        for _ in range(radius):
            nxt = []
            for x in frontier:
                for y in self.nb[x]:
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return seen

    def _random_swap(self, force=False, pick=None):
        edges = self.edge_list()
        a, b = pick if pick is not None else self.rng.choice(edges)
        c, d = self.rng.choice(edges)
        if self.rng.random() < 0.5:
            c, d = d, c
        if len({a, b, c, d}) < 4 or c in self.nb[a] or d in self.nb[b]:
            return None
        self._unlink(a, b)
        self._unlink(c, d)
        self._link(a, c)
        self._link(b, d)
        return (a, b, c, d)

    def run(self, budget: int) -> Optional[list[tuple[int, int]]]:
        for _ in range(budget):
            if not self.short:
                return self.edge_list()
            pick = self.rng.choice(sorted(self.short))
            before = self._near(pick, self.g)
            swap = self._random_swap(pick=pick)
            if swap is None:
                continue
            a, b, c, d = swap
            region = before | self._near((a, b, c, d), self.g)
            touched = {(min(x, y), max(x, y)) for x in region for y in self.nb[x]}
            old = {e for e in self.short if e[0] in region or e[1] in region}
            new = {e for e in touched if self._is_short(*e)}
            if len(new) - len(old) <= 0 or self.rng.random() < 0.002:
                self.short = (self.short - old - {(min(a, b), max(a, b)), (min(c, d), max(c, d))}) | new
            else:
                self._unlink(a, c)
                self._unlink(b, d)
                self._link(a, b)
                self._link(c, d)
        return None


def search_high_girth(n: int, r: int, g: int, seed: int = 0,
                      budget: int = DEFAULT_SWAP_BUDGET) -> Graph:
    _check_basic(n, r, g)
    rng = random.Random(seed)
    found = _SwapSearch(n, r, g, rng).run(budget)
    if found is None:
        raise SearchExhausted(f"no {r}-regular girth-{g} graph on {n} vertices within {budget} swaps")
    return Graph.from_edges(n, found)


def high_girth_regular(n: int, r: int, g: int, seed: int = 0,
                       budget: int = DEFAULT_SWAP_BUDGET) -> Graph:
    """An n-vertex r-regular graph of girth at least g (forests count as infinite girth)."""
    _check_basic(n, r, g)
    if r == 2 and n < g:
        raise Infeasible(f"every 2-regular graph on {n} vertices has a cycle shorter than {g}")
    out = constructive(n, r, g)
    if out is None:
        out = search_high_girth(n, r, g, seed, budget)
    _verify_regular_girth(out, n, r, g)
    return out


def _verify_regular_girth(out: Graph, n: int, r: int, g: int) -> None:
    assert out.order == n and (n == 0 or is_regular(out) == r), "construction lost regularity"
    gg = girth(out, limit=g - 1)
    assert gg is None or gg >= g, "construction lost girth"


# ------------------------------------------------------ deficient vertices

@dataclass(frozen=True)
class DeficiencyPattern:
    count: int
    deficiency: int = 1
    min_pairwise_distance: int = 1

    def __post_init__(self) -> None:
        if self.count < 0:
            raise BadParams("deficient vertex count must be non-negative")
        if self.deficiency != 1:
            raise BadParams("only deficiency 1 is supported")
        if self.min_pairwise_distance < 1:
            raise BadParams("min_pairwise_distance must be at least 1")


def _far_edges(g: Graph, k: int, dist: int, avoid: frozenset = frozenset(),
               taken_ends: tuple = ()) -> list[tuple[int, int]]:
    """Greedily pick k independent edges whose endpoints are pairwise far apart.

    Each pick maximises the distance to everything chosen so far (vertices in
    different components count as infinitely far).
    """
    chosen: list[tuple[int, int]] = []
    ends = list(taken_ends)
    for _ in range(k):
        near = _multi_source(g, ends)
        best = None
        for u, v in g.edges():
            if u in avoid or v in avoid:
                continue
            du, dv = near[u], near[v]
            score = min(x if x is not None else float("inf") for x in (du, dv)) if ends else float("inf")
            if score < dist:
                continue
            if best is None or score > best[0]:
                best = (score, (u, v))
                if score == float("inf"):
                    break
        if best is None:
            raise SearchExhausted(f"could not place {k} far-apart edges at distance >= {dist}")
        chosen.append(best[1])
        ends.extend(best[1])
    return chosen


def _multi_source(g: Graph, sources) -> list[Optional[int]]:
    dist: list[Optional[int]] = [None] * g.order
    queue = deque()
    for s in sources:
        if dist[s] is None:
            dist[s] = 0
            queue.append(s)
    while queue:
        x = queue.popleft()
        for y in g.neighbors(x):
            if dist[y] is None:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def _remove(g: Graph, edges) -> Graph:
    adj = list(g.adj)
    for u, v in edges:
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
    return Graph.trusted(adj)


def core_gluing(core: Graph, piece: Graph, i: int) -> Graph:
    """(r-1)-regular core of odd order m, plus (m-i)/2 copies of an r-regular
    piece each minus one edge; the 2 endpoints of every removed edge are
    joined to distinct core vertices.  The i core vertices left over are the
    deficient ones; they are the last i core indices.
    """
    m = core.order
    if (m - i) % 2 or i > m:
        raise BadParams("core order and deficiency count must have equal parity")
    u, v = piece.edges()[0]
    parts = [core]
    for _ in range((m - i) // 2):
        parts.append(_remove(piece, [(u, v)]))
    g = disjoint_union(parts)
    extra = []
    for c in range((m - i) // 2):
        shift = m + c * piece.order
        extra.append((2 * c, shift + u))
        extra.append((2 * c + 1, shift + v))
    adj = list(g.adj)
    for a, b in extra:
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    return Graph.trusted(adj)


def _try_core_gluing(n: int, r: int, g: int, i: int, dist: int) -> Optional[Graph]:
    for m in constructive_orders(r - 1, g, n):
        if m % 2 == 0 or m < i or m == n:
            continue
        pairs = (m - i) // 2
        if pairs == 0 or (n - m) % pairs:
            continue
        mp = (n - m) // pairs
        piece = constructive(mp, r, g) if mp > r else None
        core = constructive(m, r - 1, g)
        if piece is None or core is None or not piece.edges():
            continue
        # the deficient core vertices must be far apart inside the core
        ordering = _far_vertices(core, i, dist)
        if ordering is None:
            continue
        rest = [x for x in range(m) if x not in ordering]
        perm = [0] * m
        for pos, x in enumerate(rest + ordering):
            perm[x] = pos
        from ..graph import relabel

        return core_gluing(relabel(core, perm), piece, i)
    return None


def _far_vertices(g: Graph, k: int, dist: int) -> Optional[list[int]]:
    chosen: list[int] = []
    for _ in range(k):
        near = _multi_source(g, chosen)
        cands = [v for v in range(g.order) if v not in chosen
                 and (not chosen or near[v] is None or near[v] >= dist)]
        if not cands:
            return None
        chosen.append(max(cands, key=lambda v: (float("inf") if near[v] is None else near[v], -v)) if chosen else cands[0])
    return chosen


def deficient_vertices(g: Graph, r: int) -> list[int]:
    return [v for v, d in enumerate(degree_sequence(g)) if d == r - 1]


def deficient_high_girth(n: int, r: int, g: int, pattern: DeficiencyPattern, seed: int = 0,
                         budget: int = DEFAULT_SWAP_BUDGET) -> Graph:
    """n vertices, exactly ``pattern.count`` of degree r-1, the rest of degree r,
    girth >= g, deficient vertices pairwise at distance >= the pattern's bound.

    Even counts remove far-apart edges from a regular graph of girth >= g.
    Odd counts first try the core gluing (an (r-1)-regular core of odd order
    fed by r-regular pieces); failing that they delete one vertex of an
    (n+1)-vertex r-regular graph of girth >= g+1 and re-pair some of its
    neighbours.
    """
    i = pattern.count
    dist = pattern.min_pairwise_distance
    if (n * r - i) % 2:
        raise ParityInfeasible(f"n*r - i = {n * r - i} is odd")
    if i > n:
        raise Infeasible("more deficient vertices than vertices")
    if r < 1 and i:
        raise Infeasible("degree-0 graphs cannot have deficient vertices")
    if i == 0:
        return high_girth_regular(n, r, g, seed, budget)
    if i % 2 == 0:
        base = high_girth_regular(n, r, g, seed, budget)
        out = _remove(base, _far_edges(base, i // 2, dist))
    else:
        out = _try_core_gluing(n, r, g, i, dist) if r >= 3 else None
        if out is None:
            out = _vertex_deletion(n, r, g, i, dist, seed, budget)
    _verify_deficient(out, n, r, g, i, dist)
    return out


def _vertex_deletion(n, r, g, i, dist, seed, budget) -> Graph:
    base = high_girth_regular(n + 1, r, g + 1, seed, budget)
    w = n  # delete the last vertex
    nbrs = base.neighbors(w)
    keep = min(i, r)
    if (r - keep) % 2:
        raise Infeasible("deficiency parity mismatch")
    g0 = delete_vertex(base, w)
    pair = nbrs[keep:]
    adj = list(g0.adj)
    for a, b in zip(pair[0::2], pair[1::2]):
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    out = Graph.trusted(adj)
    extra = i - keep
    if extra:
        out = _remove(out, _far_edges(out, extra // 2, dist, avoid=frozenset(), taken_ends=tuple(nbrs[:keep])))
    return out


def _verify_deficient(out: Graph, n: int, r: int, g: int, i: int, dist: int) -> None:
    degs = degree_sequence(out)
    low = [v for v, d in enumerate(degs) if d == r - 1]
    if out.order != n or len(low) != i or any(d not in (r, r - 1) for d in degs):
        raise SearchExhausted("deficient construction produced the wrong degrees")
    gg = girth(out, limit=g - 1)
    if gg is not None and gg < g:
        raise SearchExhausted("deficient construction lost girth")
    for a in low:
        d = bfs_distances(out, a)
        for b in low:
            if b != a and d[b] is not None and d[b] < dist:
                raise SearchExhausted(f"deficient vertices {a}, {b} are only {d[b]} apart")

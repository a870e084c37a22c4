"""Isomorph-free enumeration of regular graphs.

Connected r-regular graphs on m vertices are grown vertex by vertex: the
lowest-indexed vertex that still lacks degree is saturated in one step, by
edges to other unsaturated vertices and to brand-new vertices.  A vertex of
full degree never changes again, so the set of completions of a partial
graph depends only on its isomorphism class; partial graphs are therefore
deduplicated by canonical form and every class is reached exactly once.

A general r-regular graph is a multiset of connected components, which is
how the full stream is assembled.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement, product
from typing import Iterator, Optional

from ..canon import canonical_key, canonical_labeling
from ..errors import BadParams, BudgetExceeded, ParityInfeasible
from ..graph import Graph, complement, disjoint_union, is_connected, relabel
from ..patterns import contains

# r >= n - COMPLEMENT_SLACK is enumerated through (n-1-r)-regular complements
COMPLEMENT_SLACK = 4


@dataclass
class Budget:
    """Node-count budget shared by one oracle run; ``limit=None`` is unlimited."""

    limit: Optional[int] = None
    used: int = 0

    def tick(self, k: int = 1) -> None:
        self.used += k
        if self.limit is not None and self.used > self.limit:
            raise BudgetExceeded(f"node budget {self.limit} exceeded")


def _prunable(f: Optional[Graph]) -> bool:
    return f is not None and f.num_edges() > 0 and is_connected(f)


def connected_regular(m: int, r: int, forbidden: Optional[Graph] = None,
                      budget: Optional[Budget] = None) -> list[Graph]:
    """One canonical representative per class of connected r-regular graphs on m vertices.

    With a connected ``forbidden`` pattern, partial graphs containing it are
    cut together with their subtree; the output is then the ``forbidden``-free
    classes only.
    """
    if budget is None:
        budget = Budget()
    if r == 0:
        out = [Graph.trusted([0])] if m == 1 else []
        return [g for g in out if forbidden is None or not contains(forbidden, g)]
    if m < r + 1 or (m * r) % 2:
        return []
    prune = forbidden if _prunable(forbidden) else None
    seen: set = set()
    leaves: dict = {}
    stack: list[tuple[list[int], int]] = [([0] * m, 1)]
    while stack:
        adj, t = stack.pop()
        budget.tick()
        deg = [a.bit_count() for a in adj]
        u = next((v for v in range(t) if deg[v] < r), None)
        if u is None:
            if t == m:
                g = Graph.trusted(adj)
                key = canonical_key(g)
                if key not in leaves:
                    leaves[key] = g
            continue
        need = r - deg[u]
        cands = [v for v in range(t) if v != u and deg[v] < r and not adj[u] >> v & 1]
        lo = max(0, need - (m - t))
        for j in range(lo, min(need, len(cands)) + 1):
            fresh = need - j
            for combo in combinations(cands, j):
                new = list(adj)
                for v in combo:
                    new[u] |= 1 << v
                    new[v] |= 1 << u
                for v in range(t, t + fresh):
                    new[u] |= 1 << v
                    new[v] |= 1 << u
                t2 = t + fresh
                if not _feasible(new, t2, m, r):
                    continue
                partial = Graph.trusted(new[:t2]) if t2 < m else Graph.trusted(new)
                if prune is not None and contains(prune, partial):
                    continue
                key = canonical_key(partial)
                if key in seen:
                    continue
                seen.add(key)
                stack.append((new, t2))
    out = []
    for key in sorted(leaves):
        g = leaves[key]
        perm, _ = canonical_labeling(g)
        out.append(relabel(g, perm))
    return out


def _feasible(adj: list[int], t: int, m: int, r: int) -> bool:
    open_vertices = [v for v in range(t) if adj[v].bit_count() < r]
    if not open_vertices:
        return t == m
    if t < m:
        return True
    open_mask = 0
    for v in open_vertices:
        open_mask |= 1 << v
    total = 0
    for v in open_vertices:
        lack = r - adj[v].bit_count()
        room = (open_mask & ~adj[v] & ~(1 << v)).bit_count()
        if lack > room:
            return False
        total += lack
    return total % 2 == 0


def _part_sizes(n: int, r: int) -> list[int]:
    if r == 0:
        return [1]
    return [m for m in range(r + 1, n + 1) if (m * r) % 2 == 0]


def _partitions(n: int, sizes: list[int], cap: Optional[int] = None) -> Iterator[list[int]]:
    """Partitions of ``n`` into parts from ``sizes``, non-increasing."""
    if n == 0:
        yield []
        return
    for m in sorted(sizes, reverse=True):
        if m > n or (cap is not None and m > cap):
            continue
        for rest in _partitions(n - m, sizes, m):
            yield [m] + rest


def _component_job(args):
    m, r, forbidden, limit = args
    return m, connected_regular(m, r, forbidden, Budget(limit))


def enumerate_regular(n: int, r: int, forbidden: Optional[Graph] = None,
                      budget: Optional[Budget] = None, *, complement_shortcut: bool = True,
                      jobs: int = 1) -> Iterator[Graph]:
    """Stream one representative per isomorphism class of r-regular n-vertex graphs.

    If ``forbidden`` is given only graphs not containing it are produced.
    """
    if n < 0 or r < 0:
        raise BadParams("n and r must be non-negative")
    if n == 0:
        if r == 0:
            yield Graph.trusted([])
        return
    if r >= n:
        raise BadParams(f"r={r} must be below n={n}")
    if (n * r) % 2:
        raise ParityInfeasible(f"n*r = {n * r} is odd")
    if budget is None:
        budget = Budget()
    co = n - 1 - r
    if complement_shortcut and r >= n - COMPLEMENT_SLACK and co < r:
        for h in enumerate_regular(n, co, None, budget, complement_shortcut=False, jobs=jobs):
            g = complement(h)
            budget.tick()
            if forbidden is not None and contains(forbidden, g):
                continue
            yield g
        return
    prune = forbidden if _prunable(forbidden) else None
    sizes = _part_sizes(n, r)
    needed = sorted({m for p in _partitions(n, sizes) for m in p})
    comps: dict[int, list[Graph]] = {}
    if jobs > 1 and len(needed) > 1:
        limit = None if budget.limit is None else budget.limit - budget.used
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for m, graphs in pool.map(_component_job, [(m, r, prune, limit) for m in needed]):
                comps[m] = graphs
    else:
        for m in needed:
            comps[m] = connected_regular(m, r, prune, budget)
    for parts in _partitions(n, sizes):
        counts: dict[int, int] = {}
        for m in parts:
            counts[m] = counts.get(m, 0) + 1
        if any(not comps[m] for m in counts):
            continue
        choices = [
            [(m, combo) for combo in combinations_with_replacement(range(len(comps[m])), c)]
            for m, c in sorted(counts.items(), reverse=True)
        ]
        for pick in product(*choices):
            graphs = [comps[m][i] for m, combo in pick for i in combo]
            g = disjoint_union(graphs)
            budget.tick()
            if forbidden is not None and prune is None and contains(forbidden, g):
                continue
            yield g


def count_regular(n: int, r: int) -> int:
    return sum(1 for _ in enumerate_regular(n, r))


def all_graphs(n: int) -> list[Graph]:
    """Every graph on exactly n vertices up to isomorphism (small n only)."""
    pairs = [(u, v) for v in range(n) for u in range(v)]
    seen: dict = {}
    for mask in range(1 << len(pairs)):
        adj = [0] * n
        for i, (u, v) in enumerate(pairs):
            if mask >> i & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        g = Graph.trusted(adj)
        seen.setdefault(canonical_key(g), g)
    return [seen[k] for k in sorted(seen)]

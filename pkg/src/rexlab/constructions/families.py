"""Clique-based families: Turán graphs, cliques minus matchings or cycles,
the extremal graphs for triangles in path-free regular graphs, and the
closed forms that go with them."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Optional, Sequence

from ..errors import BadParams, NoPartition, NotATree, OddOrder, UnsupportedResidue
from ..graph import (
    Graph,
    complete_graph,
    complete_multipartite,
    delete_edges,
    disjoint_union,
    is_tree,
)


def turan_graph(n: int, k: int) -> Graph:
    """Complete k-partite graph on n vertices with part sizes differing by at most one."""
    if not 1 <= k <= n:
        raise BadParams(f"need 1 <= k <= n, got n={n}, k={k}")
    q, rem = divmod(n, k)
    return complete_multipartite([q + 1] * rem + [q] * (k - rem))


def clique_minus_matching(m: int) -> Graph:
    """K_m with a perfect matching {01, 23, ...} removed; (m-2)-regular."""
    if m < 2 or m % 2:
        raise OddOrder(f"need an even order >= 2, got {m}")
    return delete_edges(complete_graph(m), [(i, i + 1) for i in range(0, m, 2)])


@dataclass(frozen=True)
class CyclePartition:
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(sorted(self.parts, reverse=True)))
        if any(p < 4 for p in self.parts):
            raise BadParams("cycle lengths must be at least 4")

    @property
    def total(self) -> int:
        return sum(self.parts)


def cycle_partitions(total: int, smallest: int = 4) -> list[CyclePartition]:
    """Multisets of integers >= 4 summing to ``total``, largest part first."""
    out: list[CyclePartition] = []

    def rec(rest: int, cap: int, acc: list[int]) -> None:
        if rest == 0:
            out.append(CyclePartition(tuple(acc)))
            return
        for p in range(min(rest, cap), smallest - 1, -1):
            rec(rest - p, p, acc + [p])

    rec(total, total, [])
    return out


def clique_minus_cycles(partition: CyclePartition) -> Graph:
    m = partition.total
    removed = []
    start = 0
    for p in partition.parts:
        for i in range(p):
            u, v = start + i, start + (i + 1) % p
            removed.append((min(u, v), max(u, v)))
        start += p
    return delete_edges(complete_graph(m), removed)


def g_family(k: int) -> list[tuple[CyclePartition, Graph]]:
    """All members of the family: K_{k-1} minus a 2-factor whose cycles have length >= 4."""
    if k - 1 < 4:
        raise NoPartition(f"k-1 = {k - 1} has no partition into parts >= 4")
    return [(p, clique_minus_cycles(p)) for p in cycle_partitions(k - 1)]


# --------------------------------------------------------- triangle formulas

def triangles_clique_minus_matching(m: int) -> int:
    return 8 * comb(m // 2, 3)


def triangles_g_family(k: int) -> int:
    # K_{k-1} minus a triangle-free 2-factor, k even
    return 8 * comb(k // 2 - 1, 3) + 3 - k // 2


def path_free_case(n: int, k: int) -> int:
    if k < 7:
        raise BadParams(f"k must be at least 7, got {k}")
    if n < 1:
        raise BadParams("n must be positive")
    if n % (k - 1) == 0:
        return 1
    if k % 2 == 1 or n % (k - 2) == 0:
        return 2
    return 3


def _path_free_plan(n: int, k: int) -> tuple[int, list[tuple[str, int, int]]]:
    """(case, [(kind, order, multiplicity), ...]) for the extremal graph."""
    case = path_free_case(n, k)
    if case == 1:
        return 1, [("clique", k - 1, n // (k - 1))]
    if case == 2:
        a, b = divmod(n, k - 2)
        if a - b < 0:
            raise BadParams(f"n={n} too small for k={k}: a-b = {a - b} < 0")
        return 2, [("clique", k - 2, a - b), ("minus_matching", k - 1, b)]
    a, b = divmod(n, k - 3)
    ell = b % 2
    half = b // 2
    if a - ell - half < 0:
        raise BadParams(f"n={n} too small for k={k}: clique multiplicity {a - ell - half} < 0")
    return 3, [("clique", k - 3, a - ell - half), ("minus_matching", k - 2, ell),
               ("minus_cycles", k - 1, half)]


def theorem6_extremal(n: int, k: int, partition: Optional[Sequence[int]] = None) -> Graph:
    """The extremal triangle-maximising P_k-free regular graph on n vertices.

    In the third case the cycle-deleted cliques use ``partition`` (a cycle
    partition of k-1; default the single (k-1)-cycle).
    """
    _, plan = _path_free_plan(n, k)
    cp = CyclePartition(tuple(partition) if partition is not None else (k - 1,))
    if cp.total != k - 1:
        raise BadParams(f"partition must sum to {k - 1}")
    pieces: list[Graph] = []
    for kind, order, mult in plan:
        if mult == 0:
            continue
        if kind == "clique":
            piece = complete_graph(order)
        elif kind == "minus_matching":
            piece = clique_minus_matching(order)
        else:
            piece = clique_minus_cycles(cp)
        pieces.extend([piece] * mult)
    return disjoint_union(pieces)


def rex_paths_closed_form(n: int, k: int) -> int:
    case, plan = _path_free_plan(n, k)
    if case == 1:
        return n // (k - 1) * comb(k - 1, 3)
    if case == 2:
        (_, _, x), (_, _, b) = plan
        return x * comb(k - 2, 3) + 8 * b * comb((k - 1) // 2, 3)
    (_, _, x), (_, _, ell), (_, _, half) = plan
    return (x * comb(k - 3, 3) + ell * triangles_clique_minus_matching(k - 2)
            + half * triangles_g_family(k))


def path_free_feasible(n: int, k: int) -> bool:
    try:
        _path_free_plan(n, k)
    except BadParams:
        return False
    return True


# ------------------------------------------------------------------- trees

def _color_classes(t: Graph) -> tuple[int, int]:
    color = [-1] * t.order
    color[0] = 0
    stack = [0]
    while stack:
        v = stack.pop()
        for u in t.neighbors(v):
            if color[u] < 0:
                color[u] = 1 - color[v]
                stack.append(u)
    ones = sum(color)
    return t.order - ones, ones


def is_star(t: Graph) -> bool:
    return is_tree(t) and min(_color_classes(t)) <= 1


def is_almost_star(t: Graph) -> bool:
    """Tree whose smaller 2-colour class has at most two vertices."""
    return is_tree(t) and min(_color_classes(t)) <= 2


def regex_tree_closed_form(t_tree: Graph, n: int, min_n: Optional[int] = None) -> int:
    """Largest regularity of a T-free n-vertex regular graph, for large n.

    The formula is only claimed beyond an unspecified threshold; ``min_n``
    lets a caller insist on one.
    """
    if not is_tree(t_tree):
        raise NotATree("argument is not a tree")
    t = t_tree.order
    if t < 2:
        raise BadParams("tree needs at least two vertices")
    if min_n is not None and n < min_n:
        raise BadParams(f"n={n} below the requested threshold {min_n}")
    star = is_star(t_tree)
    if n % (t - 1) == 0 or (star and (t % 2 == 0 or n % 2 == 0)):
        return t - 2
    if t % 2 == 1 or n % (t - 2) == 0 or ((star or is_almost_star(t_tree)) and n % 2 == 0):
        return t - 3
    return t - 4


# ------------------------------------------------------------- apex witness

def apex_witness(n: int) -> Graph:
    """Balanced C5 blow-up on n-1 vertices, matching removed between two
    adjacent classes, plus an apex joined to both classes.

    r = 2(n-1)/5 regular; every triangle contains the apex (vertex n-1).
    """
    if n % 5 != 1 or n < 11:
        raise UnsupportedResidue(f"need n = 1 (mod 5) and n >= 11, got {n}")
    s = (n - 1) // 5
    edges = []
    for i in range(5):
        j = (i + 1) % 5
        for x in range(s):
            for y in range(s):
                if i == 0 and x == y:
                    continue  # the removed matching between classes 0 and 1
                edges.append((i * s + x, j * s + y))
    apex = n - 1
    edges.extend((v, apex) for v in range(2 * s))
    g = Graph.from_edges(n, edges)
    parts = tuple(tuple(range(i * s, (i + 1) * s)) for i in range(5)) + ((apex,),)
    return Graph.trusted(g.adj, parts)

"""Regular and biregular bipartite graphs, built as circulants."""

from __future__ import annotations

from ..errors import BadParams, InfeasibleDegrees
from ..graph import Graph


def biregular_edges(a: int, da: int, b: int, db: int) -> list[tuple[int, int]]:
    """Edges (i, j), i in range(a), j in range(b), with every i of degree da
    and every j of degree db.

    Slot t = 0 .. a*da-1 joins A-vertex t // da to B-vertex t % b.  Since
    da <= b the slots of one A-vertex hit distinct B-vertices, and each
    residue mod b is hit a*da/b = db times.
    """
    if min(a, b, da, db) < 0:
        raise InfeasibleDegrees("negative parameter")
    if a * da != b * db:
        raise InfeasibleDegrees(f"a*da = {a * da} differs from b*db = {b * db}")
    if da > b or db > a:
        raise InfeasibleDegrees("a degree exceeds the opposite side")
    return [(t // da, t % b) for t in range(a * da)]


def biregular_bipartite(a: int, da: int, b: int, db: int) -> Graph:
    """Bipartite graph on parts [0, a) and [a, a+b) with degrees da and db."""
    edges = [(i, a + j) for i, j in biregular_edges(a, da, b, db)]
    g = Graph.from_edges(a + b, edges)
    return Graph.trusted(g.adj, (tuple(range(a)), tuple(range(a, a + b))))


def k_regular_bipartite(n: int, k: int) -> Graph:
    """i in A adjacent to n + (i + j) mod n in B for j < k."""
    if not 0 <= k <= n:
        raise BadParams(f"need 0 <= k <= n, got n={n}, k={k}")
    edges = [(i, n + (i + j) % n) for i in range(n) for j in range(k)]
    g = Graph.from_edges(2 * n, edges)
    return Graph.trusted(g.adj, (tuple(range(n)), tuple(range(n, 2 * n))))

"""Simple undirected graphs stored as per-vertex adjacency bitsets.

A vertex set is an ``int`` whose bit ``v`` is set when ``v`` belongs to it;
``g.adj[v]`` is the neighbourhood of ``v``.  Graphs are immutable, vertices
are dense ``0..order-1`` and every surgery returns a freshly indexed graph.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

from .errors import BadParams, NotAnEdge, OrderCapExceeded

# Raised from the customary 512 so that blow-ups of the regular F-free
# covers (a few hundred vertices, blown up three times) still fit.
MAX_ORDER = 4096

Edge = tuple[int, int]


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True, slots=True)
class Graph:
    order: int
    adj: tuple[int, ...]
    # Blow-up part boundaries, kept so that later surgeries can address parts.
    parts: Optional[tuple[tuple[int, ...], ...]] = field(default=None, compare=False, repr=False)

    def __post_init__(self) -> None:
        if self.order < 0:
            raise BadParams("order must be non-negative")
        if self.order > MAX_ORDER:
            raise OrderCapExceeded(f"order {self.order} exceeds cap {MAX_ORDER}")
        if len(self.adj) != self.order:
            raise BadParams("adjacency length does not match order")
        full = (1 << self.order) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise BadParams(f"vertex {v} has a neighbour index >= order")
            if nb >> v & 1:
                raise BadParams(f"loop at vertex {v}")
            for u in bits(nb):
                if not self.adj[u] >> v & 1:
                    raise BadParams(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def trusted(cls, adj: Sequence[int], parts=None) -> "Graph":
        """Build without validation; for hot paths whose adjacency is known sound."""
        g = object.__new__(cls)
        object.__setattr__(g, "order", len(adj))
        object.__setattr__(g, "adj", tuple(adj))
        object.__setattr__(g, "parts", parts)
        return g

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[Edge]) -> "Graph":
        if order > MAX_ORDER:
            raise OrderCapExceeded(f"order {order} exceeds cap {MAX_ORDER}")
        adj = [0] * order
        for u, v in edges:
            if u == v:
                raise BadParams(f"loop at vertex {u}")
            if not (0 <= u < order and 0 <= v < order):
                raise BadParams(f"edge ({u}, {v}) out of range for order {order}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls.trusted(adj)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def edges(self) -> list[Edge]:
        out = []
        for u, nb in enumerate(self.adj):
            for v in bits(nb >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def num_edges(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={self.num_edges()})"


@dataclass(frozen=True)
class BlowupSpec:
    base: Graph
    sizes: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "sizes", tuple(self.sizes))
        if len(self.sizes) != self.base.order:
            raise BadParams("need one size per base vertex")
        if any(s < 1 for s in self.sizes):
            raise BadParams("blow-up sizes must be positive")


# ---------------------------------------------------------------- builders

def empty_graph(n: int) -> Graph:
    return Graph.trusted([0] * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph.trusted([full ^ (1 << v) for v in range(n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise BadParams("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    """Path on ``n`` vertices (``n - 1`` edges)."""
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    n = sum(sizes)
    adj = [0] * n
    start = 0
    full = (1 << n) - 1
    for s in sizes:
        part = ((1 << s) - 1) << start
        for v in range(start, start + s):
            adj[v] = full & ~part
        start += s
    return Graph.trusted(adj)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Return the graph in which vertex ``v`` of ``g`` becomes ``perm[v]``."""
    adj = [0] * g.order
    for v, nb in enumerate(g.adj):
        m = 0
        for u in bits(nb):
            m |= 1 << perm[u]
        adj[perm[v]] = m
    return Graph.trusted(adj)


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    index = {v: i for i, v in enumerate(vertices)}
    adj = []
    for v in vertices:
        m = 0
        for u in bits(g.adj[v]):
            i = index.get(u)
            if i is not None:
                m |= 1 << i
        adj.append(m)
    return Graph.trusted(adj)


# --------------------------------------------------------- structural queries

def degree_sequence(g: Graph) -> list[int]:
    return [nb.bit_count() for nb in g.adj]


def is_regular(g: Graph) -> Optional[int]:
    """Common degree of a regular graph, ``None`` otherwise (and for order 0)."""
    degs = set(degree_sequence(g))
    if len(degs) == 1:
        return degs.pop()
    return None


def bfs_distances(g: Graph, source: int) -> list[Optional[int]]:
    dist: list[Optional[int]] = [None] * g.order
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in bits(g.adj[u]):
            if dist[w] is None:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def distance(g: Graph, u: int, v: int) -> Optional[int]:
    if not (0 <= u < g.order and 0 <= v < g.order):
        raise IndexError(f"vertex out of range for order {g.order}")
    if u == v:
        return 0
    seen = 1 << u
    frontier = 1 << u
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for w in bits(frontier):
            nxt |= g.adj[w]
        nxt &= ~seen
        if nxt >> v & 1:
            return d
        seen |= nxt
        frontier = nxt
    return None


def ball(g: Graph, v: int, radius: int) -> int:
    """Bitset of vertices within ``radius`` of ``v``."""
    seen = frontier = 1 << v
    for _ in range(radius):
        nxt = 0
        for w in bits(frontier):
            nxt |= g.adj[w]
        frontier = nxt & ~seen
        if not frontier:
            break
        seen |= frontier
    return seen


def components(g: Graph) -> list[list[int]]:
    seen = 0
    out = []
    for v in range(g.order):
        if seen >> v & 1:
            continue
        comp = frontier = 1 << v
        while frontier:
            nxt = 0
            for w in bits(frontier):
                nxt |= g.adj[w]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(list(bits(comp)))
    return out


def is_connected(g: Graph) -> bool:
    return g.order <= 1 or len(components(g)) == 1


def girth(g: Graph, limit: Optional[int] = None) -> Optional[int]:
    """Length of a shortest cycle, or ``None`` for a forest.

    Per-vertex BFS truncated at half the best cycle found so far.  With
    ``limit`` the search stops as soon as a cycle of length ``<= limit`` is
    found (the returned value is then only an upper bound below ``limit``).
    """
    best: Optional[int] = None
    n = g.order
    for s in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] + 1 >= best:
                break
            for w in bits(g.adj[u]):
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
        if best is not None and limit is not None and best <= limit:
            return best
        if best == 3:
            return 3
    return best


def odd_cycle(g: Graph) -> Optional[list[int]]:
    """A shortest odd cycle as a vertex list in cyclic order, ``None`` if bipartite.

    Ties are broken by the lowest starting vertex and then by BFS order, so the
    result is deterministic.
    """
    n = g.order
    best_len = None
    best_cycle = None
    for s in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[s] = 0
        queue = deque([s])
        found = None
        while queue and found is None:
            u = queue.popleft()
            if best_len is not None and 2 * dist[u] + 1 >= best_len:
                break
            for w in bits(g.adj[u]):
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif dist[w] == dist[u]:
                    found = (u, w)
                    break
        if found is None:
            continue
        u, w = found
        length = 2 * dist[u] + 1
        if best_len is None or length < best_len:
            left = [u]
            while left[-1] != s:
                left.append(parent[left[-1]])
            right = [w]
            while right[-1] != s:
                right.append(parent[right[-1]])
            # s ... u, w ... (back to s)
            best_cycle = left[::-1] + right[:-1]
            best_len = length
            if best_len == 3:
                break
    return best_cycle


def shortest_odd_cycle(g: Graph) -> Optional[int]:
    cyc = odd_cycle(g)
    return None if cyc is None else len(cyc)


def is_bipartite(g: Graph) -> bool:
    return odd_cycle(g) is None


def is_tree(g: Graph) -> bool:
    return g.order >= 1 and g.num_edges() == g.order - 1 and is_connected(g)


# ------------------------------------------------------------- graph algebra

def blowup(spec: BlowupSpec) -> Graph:
    """Replace base vertex ``i`` by an independent set of ``sizes[i]`` vertices.

    Parts ``i`` and ``j`` are completely joined iff ``ij`` is a base edge.  The
    returned graph carries the part boundaries in ``parts``.
    """
    base, sizes = spec.base, spec.sizes
    starts = []
    total = 0
    for s in sizes:
        starts.append(total)
        total += s
    if total > MAX_ORDER:
        raise OrderCapExceeded(f"blow-up order {total} exceeds cap {MAX_ORDER}")
    masks = [((1 << s) - 1) << st for s, st in zip(sizes, starts)]
    adj = [0] * total
    for i in range(base.order):
        nb = 0
        for j in bits(base.adj[i]):
            nb |= masks[j]
        for v in range(starts[i], starts[i] + sizes[i]):
            adj[v] = nb
    parts = tuple(tuple(range(st, st + s)) for s, st in zip(sizes, starts))
    return Graph.trusted(adj, parts)


def uniform_blowup(base: Graph, m: int) -> Graph:
    return blowup(BlowupSpec(base, (m,) * base.order))


def complement(g: Graph) -> Graph:
    full = (1 << g.order) - 1
    return Graph.trusted([full & ~nb & ~(1 << v) for v, nb in enumerate(g.adj)])


def disjoint_union(gs: Iterable[Graph]) -> Graph:
    adj: list[int] = []
    for g in gs:
        shift = len(adj)
        adj.extend(nb << shift for nb in g.adj)
    if len(adj) > MAX_ORDER:
        raise OrderCapExceeded(f"union order {len(adj)} exceeds cap {MAX_ORDER}")
    return Graph.trusted(adj)


def delete_edges(g: Graph, es: Iterable[Edge]) -> Graph:
    adj = list(g.adj)
    for u, v in es:
        if not (0 <= u < g.order and 0 <= v < g.order) or not adj[u] >> v & 1:
            raise NotAnEdge(f"({u}, {v}) is not an edge")
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
    return Graph.trusted(adj, g.parts)


def add_edges(g: Graph, es: Iterable[Edge]) -> Graph:
    adj = list(g.adj)
    for u, v in es:
        if u == v:
            raise BadParams(f"loop at vertex {u}")
        if adj[u] >> v & 1:
            raise BadParams(f"({u}, {v}) is already an edge")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph.trusted(adj, g.parts)


def delete_vertex(g: Graph, v: int) -> Graph:
    keep = [u for u in range(g.order) if u != v]
    return induced_subgraph(g, keep)

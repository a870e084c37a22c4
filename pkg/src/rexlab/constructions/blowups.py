"""Blow-up based constructions: regular subgraphs of C5 blow-ups, the
regular F-free cover of a graph H, and the C_ell-rich C_{2k+1}-free graph."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Optional

from ..errors import BadParams, DichotomyViolated, Infeasible
from ..graph import Graph
from ..patterns import exists_homomorphism
from .bipartite import biregular_edges
from .girth import (
    DeficiencyPattern,
    constructive_orders,
    deficient_high_girth,
    deficient_vertices,
)


# ------------------------------------------------------------ C5 blow-ups

def _sizes_by_spread(n: int) -> Iterator[tuple[int, ...]]:
    """Compositions of n into 5 positive parts, most balanced first."""
    base = n // 5
    seen = set()
    for spread in range(0, n + 1):
        lo, hi = max(1, base - spread), base + spread
        found = []

        def rec(prefix: list[int], rest: int) -> None:
            if len(prefix) == 4:
                if lo <= rest <= hi:
                    found.append(tuple(prefix + [rest]))
                return
            for s in range(lo, min(hi, rest) + 1):
                rec(prefix + [s], rest - s)

        rec([], n)
        for sizes in sorted(found):
            if sizes not in seen:
                seen.add(sizes)
                yield sizes
        if lo == 1 and hi >= n:
            return


def _degree_split(sizes: tuple[int, ...], d: int) -> Optional[list[int]]:
    """out[i] = degree of class i towards class i+1; the rest goes to i-1.

    Needs sizes[i] * out[i] == sizes[i+1] * (d - out[i+1]) around the cycle.
    """
    for e0 in range(d + 1):
        out = [e0]
        ok = True
        for i in range(4):
            num = sizes[i] * out[i]
            if num % sizes[i + 1]:
                ok = False
                break
            back = num // sizes[i + 1]
            if back > d:
                ok = False
                break
            out.append(d - back)
        if not ok:
            continue
        if sizes[4] * out[4] != sizes[0] * (d - out[0]):
            continue
        if all(out[i] <= sizes[(i + 1) % 5] and d - out[i] <= sizes[(i - 1) % 5] for i in range(5)):
            return out
    return None


def c5_blowup_regular(n: int, d: int, seed: int = 0) -> Graph:
    """A d-regular spanning subgraph of a C5 blow-up on n vertices.

    Part sizes are tried from the most balanced outwards; the join between
    consecutive classes i, i+1 is a biregular bipartite graph with degrees
    out[i] and d - out[i+1].  ``seed`` rotates the circulant joins.
    """
    if n < 5 or d < 0:
        raise BadParams("need n >= 5 and d >= 0")
    if 5 * d > 2 * n:
        raise Infeasible(f"d={d} exceeds 2n/5 for n={n}")
    if (n * d) % 2:
        raise Infeasible(f"n*d = {n * d} is odd")
    for sizes in _sizes_by_spread(n):
        out = _degree_split(sizes, d)
        if out is None:
            continue
        starts = [sum(sizes[:i]) for i in range(5)]
        edges = []
        for i in range(5):
            j = (i + 1) % 5
            a, b = sizes[i], sizes[j]
            shift = seed % b if b else 0
            for x, y in biregular_edges(a, out[i], b, d - out[j]):
                edges.append((starts[i] + x, starts[j] + (y + shift) % b))
        g = Graph.from_edges(n, edges)
        parts = tuple(tuple(range(st, st + s)) for st, s in zip(starts, sizes))
        return Graph.trusted(g.adj, parts)
    raise Infeasible(f"no degree split realises a {d}-regular C5 blow-up subgraph on {n} vertices")


# ---------------------------------------------------------- blow-up cover

@lru_cache(maxsize=None)
def _gadget(r: int, g: int, i: int, dist: int, seed: int) -> tuple[Graph, tuple[int, ...]]:
    """Graph with i vertices of degree r-1 (pairwise >= dist apart), rest degree r, girth >= g."""
    if i % 2 == 0:
        # i/2 disjoint copies of one base graph, one edge removed from each
        base = next(m for m in constructive_orders(r, g, 4096) if m > r)
        out = deficient_high_girth(max(1, i // 2) * base, r, g, DeficiencyPattern(i, 1, dist), seed)
    else:
        # one vertex deleted from a graph of girth >= g+1
        base = next(m for m in constructive_orders(r, g + 1, 4096) if m > r and m - 1 >= i)
        out = deficient_high_girth(base - 1, r, g, DeficiencyPattern(i, 1, dist), seed)
    return out, tuple(deficient_vertices(out, r))


def blowup_cover(h: Graph, f: Graph, g: int = 7, seed: int = 0) -> Graph:
    """A (2*Delta+1)-regular graph that contains h and whose blow-ups stay f-free.

    Every vertex v of h receives its own gadget with 2*Delta+1-deg(v)
    deficient vertices, all joined to v.  Gadget girth is max(g, |V(f)|+1)
    and deficient vertices are pairwise at least |V(f)| apart.  The result
    carries parts: h's vertices first, then one part per gadget.
    """
    if h.num_edges() == 0:
        raise BadParams("h must have an edge")
    if g < 5:
        raise BadParams("gadget girth must be at least 5")
    if exists_homomorphism(f, h):
        raise DichotomyViolated("f maps homomorphically into h; every blow-up of h contains f")
    delta = max(h.degree(v) for v in range(h.order))
    r = 2 * delta + 1
    girth_needed = max(g, f.order + 1)
    adj = list(h.adj)
    parts = [tuple(range(h.order))]
    for v in range(h.order):
        gadget, low = _gadget(r, girth_needed, r - h.degree(v), f.order, seed)
        shift = len(adj)
        adj.extend(nb << shift for nb in gadget.adj)
        for w in low:
            adj[v] |= 1 << (shift + w)
            adj[shift + w] |= 1 << v
        parts.append(tuple(range(shift, shift + gadget.order)))
    return Graph(len(adj), tuple(adj), tuple(parts))


# ------------------------------------------------------------ cycle-rich

class _Builder:
    def __init__(self):
        self.adj: list[int] = []

    def new(self, count: int) -> list[int]:
        start = len(self.adj)
        self.adj.extend([0] * count)
        return list(range(start, start + count))

    def link(self, u: int, v: int) -> None:
        self.adj[u] |= 1 << v
        self.adj[v] |= 1 << u

    def join(self, xs, ys) -> None:
        for x in xs:
            for y in ys:
                self.link(x, y)

    def regular_join(self, xs, ys, deg: int) -> None:
        for i, j in biregular_edges(len(xs), deg, len(ys), deg):
            self.link(xs[i], ys[j])


def _bridge(b: _Builder, x: int, y: int, p: int, m: int, length: int) -> None:
    """Bipartite tube adding p to the degrees of x and y, internally 2m-regular.

    x - X_0 (p) = X_1 - ... - X_L = Y_0 (p) - y with |X_j| = 2m-1; '=' is a
    complete join and the inner joins alternate (2m-p)- and p-regular.
    Every x-y path inside has length >= L+3.
    """
    x0 = b.new(p)
    for w in x0:
        b.link(x, w)
    layers = [b.new(2 * m - 1) for _ in range(length)]
    b.join(x0, layers[0])
    for j in range(length - 1):
        b.regular_join(layers[j], layers[j + 1], 2 * m - p if j % 2 == 0 else p)
    y0 = b.new(p)
    b.join(layers[-1], y0)
    for w in y0:
        b.link(w, y)


def cycle_rich(m: int, ell: int, k: int) -> Graph:
    """2m-regular, C_{2k+1}-free, with at least m^((ell-1)/2) copies of C_ell.

    Start from C_ell with (ell-1)/2 pairwise non-adjacent vertices blown up to
    m-sets.  Blown-up vertices are paired (class against class, and inside a
    left-over class) and every pair gets a bridge adding 2m-2 to both ends;
    the last odd vertex instead gets two bridges of m-1, one to each of the
    two adjacent unblown vertices u, v (which otherwise get one m-1 bridge
    between them).  Bridges have length > 2k+1 and are bipartite inside, so
    every cycle through a bridge is longer than 2k+1, and the blown-up cycle
    itself has odd cycles of length ell only.
    """
    if ell % 2 == 0 or not 3 < ell < 2 * k + 1:
        raise BadParams("need ell odd with 3 < ell < 2k+1")
    if m % 2 == 0 or m < 3:
        raise BadParams("m must be odd and at least 3")
    length = max(2, 2 * k - 2)
    b = _Builder()
    # C_ell: positions 1, 3, ..., ell-2 are blown up; u = position 0, v = ell-1
    slots: list[list[int]] = []
    for pos in range(ell):
        slots.append(b.new(m if pos % 2 == 1 and pos <= ell - 2 else 1))
    for pos in range(ell):
        b.join(slots[pos], slots[(pos + 1) % ell])
    u, v = slots[0][0], slots[ell - 1][0]
    classes = [slots[pos] for pos in range(1, ell - 1, 2)]
    for a, a2 in zip(classes[0::2], classes[1::2]):
        for x, y in zip(a, a2):
            _bridge(b, x, y, 2 * m - 2, m, length)
    if len(classes) % 2:
        left = classes[-1]
        for x, y in zip(left[0:m - 1:2], left[1:m - 1:2]):
            _bridge(b, x, y, 2 * m - 2, m, length)
        last = left[m - 1]
        _bridge(b, last, u, m - 1, m, length)
        _bridge(b, last, v, m - 1, m, length)
    else:
        _bridge(b, u, v, m - 1, m, length)
    core = tuple(x for s in slots for x in s)
    return Graph(len(b.adj), tuple(b.adj), (core,))

"""Canonical labelling by partition refinement and individualisation.

The search follows the classic scheme: refine an ordered partition to an
equitable one, individualise a vertex of the first smallest non-singleton
cell, recurse.  Each leaf yields a relabelled adjacency matrix; the smallest
one is the canonical form.  Leaves that reproduce the first or the best
certificate give automorphisms, which prune sibling subtrees (orbit pruning)
and let the search jump back to the common ancestor.  The automorphism group
order is the product, along the first path, of the orbit sizes of the
individualised vertex under the automorphisms fixing the earlier ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .graph import Graph, bits, relabel
from .graph6 import graph6_encode

CANON_MAX_ORDER = 512


@dataclass(frozen=True)
class CanonicalForm:
    canon_graph6: bytes
    order: int
    automorphism_count: int

    def key(self) -> str:
        return self.canon_graph6.decode("ascii")

    def to_json(self) -> dict:
        return {
            "graph6": self.key(),
            "order": self.order,
            "automorphisms": self.automorphism_count,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "CanonicalForm":
        return cls(obj["graph6"].encode("ascii"), obj["order"], obj["automorphisms"])


def _refine(adj: Sequence[int], cells: list[list[int]], active: list[int]) -> list[list[int]]:
    """Refine ``cells`` to the coarsest equitable partition below it.

    ``active`` lists indices of cells to use as splitters.  Fragments of a
    split cell are ordered by their neighbour count into the splitter, which
    keeps the procedure label-equivariant.
    """
    cells = [c for c in cells]
    stack = list(active)
    in_stack = set(stack)
    while stack:
        # always take the earliest splitter cell: a label-independent choice
        stack.sort(reverse=True)
        w = stack.pop()
        in_stack.discard(w)
        wmask = 0
        for v in cells[w]:
            wmask |= 1 << v
        i = 0
        while i < len(cells):
            cell = cells[i]
            if len(cell) == 1:
                i += 1
                continue
            groups: dict[int, list[int]] = {}
            for v in cell:
                groups.setdefault((adj[v] & wmask).bit_count(), []).append(v)
            if len(groups) == 1:
                i += 1
                continue
            frags = [groups[k] for k in sorted(groups)]
            cells[i:i + 1] = frags
            added = len(frags) - 1
            # shift pending splitter indices that sit after the split cell
            shifted = []
            for s in stack:
                shifted.append(s + added if s > i else s)
            stack = shifted
            in_stack = set(stack)
            if i in in_stack:
                for k in range(1, len(frags)):
                    stack.append(i + k)
                    in_stack.add(i + k)
            else:
                biggest = max(range(len(frags)), key=lambda k: (len(frags[k]), -k))
                for k in range(len(frags)):
                    if k != biggest:
                        stack.append(i + k)
                        in_stack.add(i + k)
            if w > i:
                w += added
            i += len(frags)
    return cells


class _Search:
    def __init__(self, g: Graph):
        self.g = g
        self.adj = g.adj
        self.n = g.order
        self.first_cert = None
        self.first_order: list[int] = []
        self.first_path: list[int] = []
        self.best_cert = None
        self.best_order: list[int] = []
        self.best_path: list[int] = []
        self.automorphisms: list[tuple[int, ...]] = []
        self.nodes = 0

    def certificate(self, order: list[int]) -> tuple[int, ...]:
        pos = [0] * self.n
        for i, v in enumerate(order):
            pos[v] = i
        rows = []
        for v in order:
            m = 0
            for u in bits(self.adj[v]):
                m |= 1 << pos[u]
            rows.append(m)
        return tuple(rows)

    def orbits(self, fixed: Sequence[int]) -> list[int]:
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gamma in self.automorphisms:
            if any(gamma[p] != p for p in fixed):
                continue
            for x in range(self.n):
                a, b = find(x), find(gamma[x])
                if a != b:
                    parent[max(a, b)] = min(a, b)
        return [find(x) for x in range(self.n)]

    def leaf(self, cells: list[list[int]], path: list[int]) -> Optional[int]:
        order = [c[0] for c in cells]
        cert = self.certificate(order)
        if self.first_cert is None:
            self.first_cert = self.best_cert = cert
            self.first_order = self.best_order = order
            self.first_path = self.best_path = list(path)
            return None
        if cert == self.first_cert:
            self._record(self.first_order, order)
            return _common_prefix(path, self.first_path)
        if cert == self.best_cert:
            self._record(self.best_order, order)
            return _common_prefix(path, self.best_path)
        if cert < self.best_cert:
            self.best_cert = cert
            self.best_order = order
            self.best_path = list(path)
        return None

    def _record(self, src: list[int], dst: list[int]) -> None:
        gamma = [0] * self.n
        for a, b in zip(src, dst):
            gamma[a] = b
        self.automorphisms.append(tuple(gamma))

    def run(self, cells: list[list[int]], path: list[int]) -> Optional[int]:
        self.nodes += 1
        if all(len(c) == 1 for c in cells):
            return self.leaf(cells, path)
        ti = min((i for i, c in enumerate(cells) if len(c) > 1), key=lambda i: (len(cells[i]), i))
        target = sorted(cells[ti])
        tried: list[int] = []
        n_auts = -1
        orbit = None
        level = len(path)
        for v in target:
            if tried:
                if n_auts != len(self.automorphisms):
                    orbit = self.orbits(path)
                    n_auts = len(self.automorphisms)
                if any(orbit[v] == orbit[u] for u in tried):
                    continue
            tried.append(v)
            child = cells[:ti] + [[v], [u for u in cells[ti] if u != v]] + cells[ti + 1:]
            child = _refine(self.adj, child, [ti])
            jump = self.run(child, path + [v])
            if jump is not None and jump < level:
                return jump
        return None

    def group_order(self) -> int:
        total = 1
        for i, v in enumerate(self.first_path):
            orbit = self.orbits(self.first_path[:i])
            total *= sum(1 for x in range(self.n) if orbit[x] == orbit[v])
        return total


def _common_prefix(a: Sequence[int], b: Sequence[int]) -> int:
    k = 0
    for x, y in zip(a, b):
        if x != y:
            break
        k += 1
    return k


def canonical_labeling(g: Graph, colors: Optional[Sequence[int]] = None) -> tuple[list[int], int]:
    """Return ``(perm, |Aut|)`` with ``relabel(g, perm)`` canonical.

    ``colors`` (optional) restricts isomorphisms to colour-preserving ones;
    the colour classes are ordered by colour value.
    """
    n = g.order
    if n == 0:
        return [], 1
    if colors is None:
        colors = [0] * n
    # degree is an isomorphism invariant, so seeding with it is free refinement
    keyed: dict[tuple, list[int]] = {}
    for v in range(n):
        keyed.setdefault((colors[v], g.adj[v].bit_count()), []).append(v)
    cells = [keyed[k] for k in sorted(keyed)]
    cells = _refine(g.adj, cells, list(range(len(cells))))
    search = _Search(g)
    search.run(cells, [])
    perm = [0] * n
    for i, v in enumerate(search.best_order):
        perm[v] = i
    return perm, search.group_order()


def canonical_form(g: Graph) -> CanonicalForm:
    if g.order > CANON_MAX_ORDER:
        from .errors import OrderCapExceeded

        raise OrderCapExceeded(f"canonical form limited to order {CANON_MAX_ORDER}")
    perm, aut = canonical_labeling(g)
    return CanonicalForm(graph6_encode(relabel(g, perm)), g.order, aut)


def canonical_graph(g: Graph) -> Graph:
    perm, _ = canonical_labeling(g)
    return relabel(g, perm)


def canonical_key(g: Graph, colors: Optional[Sequence[int]] = None) -> tuple:
    """Hashable isomorphism key (colour-aware) without the graph6 round trip."""
    perm, _ = canonical_labeling(g, colors)
    inv = [0] * g.order
    for v, p in enumerate(perm):
        inv[p] = v
    rows = []
    for v in inv:
        m = 0
        for u in bits(g.adj[v]):
            m |= 1 << perm[u]
        rows.append(m)
    if colors is None:
        return (g.order, tuple(rows))
    return (g.order, tuple(colors[v] for v in inv), tuple(rows))


def is_isomorphic(a: Graph, b: Graph) -> bool:
    if a.order != b.order or a.num_edges() != b.num_edges():
        return False
    return canonical_form(a).canon_graph6 == canonical_form(b).canon_graph6

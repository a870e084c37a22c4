"""Small finite fields and the incidence geometries built on them.

Only what the high-girth library needs: GF(q) for prime powers q < 10, the
projective plane PG(2, q) (incidence graph: (q+1)-regular, girth 6) and the
symplectic generalized quadrangle W(q) (incidence graph: (q+1)-regular,
girth 8).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from ..errors import BadParams

# q -> (p, e, modulus coefficients low-to-high, monic of degree e)
_FIELDS = {
    2: (2, 1, (0, 1)),
    3: (3, 1, (0, 1)),
    4: (2, 2, (1, 1, 1)),
    5: (5, 1, (0, 1)),
    7: (7, 1, (0, 1)),
    8: (2, 3, (1, 1, 0, 1)),
    9: (3, 2, (1, 0, 1)),
}

SUPPORTED_Q = tuple(sorted(_FIELDS))


class GF:
    """Elements are integers 0..q-1 encoding coefficient vectors base p."""

    def __init__(self, q: int):
        if q not in _FIELDS:
            raise BadParams(f"unsupported field order {q}")
        self.q = q
        self.p, self.e, self.modulus = _FIELDS[q]
        self.add = [[self._add(a, b) for b in range(q)] for a in range(q)]
        self.mul = [[self._mul(a, b) for b in range(q)] for a in range(q)]
        self.neg = [next(b for b in range(q) if self.add[a][b] == 0) for a in range(q)]
        self.inv = [0] + [next(b for b in range(q) if self.mul[a][b] == 1) for a in range(1, q)]

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.e):
            out.append(a % self.p)
            a //= self.p
        return out

    def _number(self, digits) -> int:
        return sum(d * self.p ** i for i, d in enumerate(digits))

    def _add(self, a: int, b: int) -> int:
        return self._number((x + y) % self.p for x, y in zip(self._digits(a), self._digits(b)))

    def _mul(self, a: int, b: int) -> int:
        p, e = self.p, self.e
        prod = [0] * (2 * e - 1)
        for i, x in enumerate(self._digits(a)):
            for j, y in enumerate(self._digits(b)):
                prod[i + j] = (prod[i + j] + x * y) % p
        # reduce by the monic modulus, highest degree first
        for d in range(len(prod) - 1, e - 1, -1):
            c = prod[d]
            if c:
                for k in range(e + 1):
                    prod[d - e + k] = (prod[d - e + k] - c * self.modulus[k]) % p
        return self._number(prod[:e])

    def dot(self, x, y) -> int:
        s = 0
        for a, b in zip(x, y):
            s = self.add[s][self.mul[a][b]]
        return s


def _normalize(f: GF, vec) -> tuple[int, ...]:
    lead = next(x for x in vec if x)
    inv = f.inv[lead]
    return tuple(f.mul[inv][x] for x in vec)


def projective_points(f: GF, dim: int) -> list[tuple[int, ...]]:
    """Points of PG(dim-1, q) as normalised vectors (first non-zero entry 1)."""
    pts = []
    for vec in product(range(f.q), repeat=dim):
        if any(vec) and next(x for x in vec if x) == 1:
            pts.append(vec)
    return pts


@lru_cache(maxsize=None)
def pg2_incidence_edges(q: int) -> tuple[int, list[tuple[int, int]]]:
    """(order, edges) of the point-line incidence graph of PG(2, q)."""
    f = GF(q)
    pts = projective_points(f, 3)
    n = len(pts)
    edges = []
    for i, p in enumerate(pts):
        for j, line in enumerate(pts):
            if f.dot(p, line) == 0:
                edges.append((i, n + j))
    return 2 * n, edges


@lru_cache(maxsize=None)
def gq_incidence_edges(q: int) -> tuple[int, list[tuple[int, int]]]:
    """(order, edges) of the incidence graph of the quadrangle W(q).

    Points are all points of PG(3, q); lines are the totally isotropic lines
    of the symplectic form x0 y1 - x1 y0 + x2 y3 - x3 y2.
    """
    f = GF(q)
    pts = projective_points(f, 4)
    index = {p: i for i, p in enumerate(pts)}

    def form(x, y) -> int:
        terms = [f.mul[x[0]][y[1]], f.neg[f.mul[x[1]][y[0]]],
                 f.mul[x[2]][y[3]], f.neg[f.mul[x[3]][y[2]]]]
        s = 0
        for t in terms:
            s = f.add[s][t]
        return s

    lines: dict[frozenset, None] = {}
    for i, x in enumerate(pts):
        for y in pts[i + 1:]:
            if form(x, y):
                continue
            members = {index[x], index[y]}
            for a in range(1, f.q):
                for b in range(1, f.q):
                    vec = tuple(f.add[f.mul[a][xi]][f.mul[b][yi]] for xi, yi in zip(x, y))
                    if any(vec):
                        members.add(index[_normalize(f, vec)])
            lines.setdefault(frozenset(members), None)
    n = len(pts)
    edges = []
    for j, line in enumerate(lines):
        for i in sorted(line):
            edges.append((i, n + j))
    return n + len(lines), edges

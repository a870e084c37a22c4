"""Exhaustive rex(n, H, F) and regex(n, F) over all regular n-vertex graphs."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Optional

from ..canon import CanonicalForm, canonical_form
from ..errors import BadParams, BudgetExceeded, NotExhaustive
from ..graph import Graph, complete_graph
from ..patterns import contains, copies
from .enumerate import Budget, enumerate_regular


@dataclass
class RexRecord:
    n: int
    pattern: CanonicalForm
    forbidden: CanonicalForm
    best_value: Optional[int]
    best_regularity: Optional[int]
    certificates: list[CanonicalForm]
    regularities_scanned: list[int]
    exhaustive: bool
    r_filter: Optional[int] = None
    stats: dict = field(default_factory=dict, compare=False)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "pattern": self.pattern.to_json(),
            "forbidden": self.forbidden.to_json(),
            "r_filter": self.r_filter,
            "best_value": self.best_value,
            "best_regularity": self.best_regularity,
            "certificates": [c.to_json() for c in self.certificates],
            "regularities_scanned": self.regularities_scanned,
            "exhaustive": self.exhaustive,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "RexRecord":
        return cls(
            n=obj["n"],
            pattern=CanonicalForm.from_json(obj["pattern"]),
            forbidden=CanonicalForm.from_json(obj["forbidden"]),
            best_value=obj["best_value"],
            best_regularity=obj["best_regularity"],
            certificates=[CanonicalForm.from_json(c) for c in obj["certificates"]],
            regularities_scanned=list(obj["regularities_scanned"]),
            exhaustive=obj["exhaustive"],
            r_filter=obj.get("r_filter"),
        )

    def key(self) -> tuple:
        return (self.n, self.pattern.key(), self.forbidden.key(), self.r_filter)


def triangle_bound(n: int, r: int) -> Fraction:
    """Each vertex lies in at most C(r, 2) triangles: N(K3, G) <= n/3 * C(r, 2)."""
    return Fraction(n * comb(r, 2), 3)


def rex_brute(n: int, h: Graph, f: Graph, r_filter: Optional[int] = None, *,
              budget: Optional[int] = None, degree_bound: bool = True,
              jobs: int = 1) -> RexRecord:
    """Maximum number of copies of ``h`` over ``f``-free regular graphs on ``n`` vertices.

    Regularities are scanned from the top down.  When ``h`` is a triangle the
    per-vertex bound prunes any regularity that cannot beat the current best;
    pruned regularities still count as covered.  A blown budget yields a
    record with ``exhaustive=False``.
    """
    if n < 1:
        raise BadParams("n must be positive")
    pattern = canonical_form(h)
    forbidden = canonical_form(f)
    is_triangle = pattern.canon_graph6 == canonical_form(complete_graph(3)).canon_graph6
    meter = Budget(budget)
    regs = [r_filter] if r_filter is not None else list(range(n - 1, -1, -1))
    best: Optional[int] = None
    best_r: Optional[int] = None
    certs: dict[bytes, tuple[int, CanonicalForm]] = {}
    covered: list[int] = []
    exhaustive = True
    pruned: list[int] = []
    graphs_seen = 0
    for r in regs:
        if r < 0 or r >= n or (n * r) % 2:
            continue
        if degree_bound and is_triangle and best is not None and triangle_bound(n, r) < best:
            covered.append(r)
            pruned.append(r)
            continue
        try:
            for g in enumerate_regular(n, r, f, meter, jobs=jobs):
                graphs_seen += 1
                value = copies(h, g)
                if best is None or value > best:
                    best, certs = value, {}
                if value == best:
                    cf = canonical_form(g)
                    certs[cf.canon_graph6] = (r, cf)
        except BudgetExceeded:
            exhaustive = False
            break
        covered.append(r)
    ordered = sorted(certs.values(), key=lambda rc: (rc[1].canon_graph6, rc[0]))
    if ordered:
        best_r = min(r for r, _ in ordered)
    return RexRecord(
        n=n,
        pattern=pattern,
        forbidden=forbidden,
        best_value=best,
        best_regularity=best_r,
        certificates=[cf for _, cf in ordered],
        regularities_scanned=sorted(covered),
        exhaustive=exhaustive,
        r_filter=r_filter,
        stats={"nodes": meter.used, "graphs": graphs_seen, "pruned": sorted(pruned)},
    )


@dataclass
class RegexResult:
    n: int
    forbidden: CanonicalForm
    degree: Optional[int]
    certificate: Optional[CanonicalForm]
    exhaustive: bool


def regex_brute(n: int, f: Graph, *, budget: Optional[int] = None, jobs: int = 1) -> RegexResult:
    """Largest d admitting an ``f``-free d-regular graph on ``n`` vertices."""
    if f.num_edges() == 0:
        raise BadParams("forbidden graph must have an edge")
    meter = Budget(budget)
    for d in range(n - 1, -1, -1):
        if (n * d) % 2:
            continue
        try:
            for g in enumerate_regular(n, d, f, meter, jobs=jobs):
                return RegexResult(n, canonical_form(f), d, canonical_form(g), True)
        except BudgetExceeded:
            return RegexResult(n, canonical_form(f), None, None, False)
    return RegexResult(n, canonical_form(f), None, None, True)


def verify_uniqueness(record: RexRecord, expected: Graph) -> bool:
    """True iff the record's certificate set is exactly ``{expected}`` up to isomorphism."""
    if not record.exhaustive:
        raise NotExhaustive("record is not exhaustive")
    target = canonical_form(expected).canon_graph6
    return [c.canon_graph6 for c in record.certificates] == [target]

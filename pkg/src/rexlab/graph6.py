"""graph6 encoding and the plain edge-list text format used for fixtures."""

from __future__ import annotations

from pathlib import Path
from typing import Union

from .errors import MalformedGraph6
from .graph import Graph

HEADER = b">>graph6<<"


def _encode_n(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def graph6_encode(g: Graph) -> bytes:
    """Standard graph6: size prefix, then the upper triangle column by column."""
    n = g.order
    out = bytearray(_encode_n(n))
    acc = 0
    nbits = 0
    for j in range(1, n):
        col = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def _decode_n(data: bytes) -> tuple[int, int]:
    if not data:
        raise MalformedGraph6("empty input")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise MalformedGraph6("truncated size field")
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        return n, 8
    if len(data) < 4:
        raise MalformedGraph6("truncated size field")
    n = 0
    for b in data[1:4]:
        n = (n << 6) | (b - 63)
    return n, 4


def graph6_decode(s: Union[bytes, str]) -> Graph:
    data = s.encode("ascii") if isinstance(s, str) else bytes(s)
    data = data.strip()
    if data.startswith(HEADER):
        data = data[len(HEADER):]
    if any(b < 63 or b > 126 for b in data):
        raise MalformedGraph6("byte outside the printable graph6 range")
    n, pos = _decode_n(data)
    body = data[pos:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise MalformedGraph6(f"expected {need} data bytes for n={n}, got {len(body)}")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    total = n * (n - 1) // 2
    if total % 6:
        last = body[-1] - 63
        if last & ((1 << (6 - total % 6)) - 1):
            raise MalformedGraph6("non-zero padding bits")
    return Graph.trusted(adj)


def edgelist_dumps(g: Graph) -> str:
    lines = [f"# order: {g.order}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def edgelist_loads(text: str) -> Graph:
    """Parse "u v" lines (0-based).  ``# order: N`` fixes the order explicitly."""
    order = None
    edges = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("order:"):
                order = int(body.split(":", 1)[1])
            continue
        u, v = (int(t) for t in line.split())
        edges.append((u, v))
    if order is None:
        order = 1 + max((max(e) for e in edges), default=-1)
    return Graph.from_edges(order, edges)


def read_graph(path: Union[str, Path]) -> Graph:
    """Load a graph6 (first non-empty line) or edge-list file."""
    p = Path(path)
    raw = p.read_bytes()
    text = raw.decode("ascii", errors="replace")
    first = next((ln.strip() for ln in text.splitlines() if ln.strip()), "")
    if p.suffix in (".g6", ".graph6") or (first and " " not in first and not first.startswith("#")):
        return graph6_decode(first)
    return edgelist_loads(text)

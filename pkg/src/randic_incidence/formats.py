"""Text formats: graph6 (short form), plain edge lists, matrix dumps."""
from __future__ import annotations

from pathlib import Path

import numpy as np

from .graph import Graph, GraphError, from_edge_list

GRAPH6_MAX_N = 62


class Graph6Error(GraphError):
    pass


class Graph6SizeError(Graph6Error):
    """The input uses the long-form header (n > 62), which is not supported."""


def _upper_pairs(n: int):
    # graph6 bit order: column-major over the upper triangle
    for j in range(1, n):
        for i in range(j):
            yield i, j


def write_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise Graph6SizeError(f"graph6 short form holds n <= {GRAPH6_MAX_N}, got {g.n}")
    bits = [1 if g.has_edge(i, j) else 0 for i, j in _upper_pairs(g.n)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(63 + g.n)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(chr(63 + val))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 string")
    head = ord(s[0])
    if head == 126:
        raise Graph6SizeError("graph6 long form (n > 62) is not supported")
    if not 63 <= head < 126:
        raise Graph6Error(f"malformed graph6 header byte {s[0]!r}")
    n = head - 63
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    body = s[1:]
    if len(body) < nchars:
        raise Graph6Error(f"truncated graph6 payload: need {nchars} bytes, got {len(body)}")
    if len(body) > nchars:
        raise Graph6Error(f"trailing data after graph6 payload: {body[nchars:]!r}")
    bits = []
    for ch in body:
        val = ord(ch) - 63
        if not 0 <= val < 64:
            raise Graph6Error(f"invalid graph6 payload byte {ch!r}")
        bits.extend((val >> k) & 1 for k in range(5, -1, -1))
    if any(bits[nbits:]):
        raise Graph6Error("non-zero padding bits in graph6 payload")
    pairs = [p for p, b in zip(_upper_pairs(n), bits) if b]
    return from_edge_list(n, pairs)


def parse_edge_list(text: str) -> Graph:
    """First line ``n m``, then ``m`` lines ``u v`` (0-indexed)."""
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise GraphError("empty edge-list input")
    try:
        n, m = (int(x) for x in lines[0])
        pairs = [(int(a), int(b)) for a, b in lines[1:]]
    except ValueError as exc:
        raise GraphError(f"malformed edge-list input: {exc}") from None
    if len(pairs) != m:
        raise GraphError(f"header promises {m} edges, found {len(pairs)}")
    return from_edge_list(n, pairs)


def write_edge_list(g: Graph) -> str:
    rows = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(rows) + "\n"


def read_edge_list(path: str | Path) -> Graph:
    return parse_edge_list(Path(path).read_text())


def format_matrix(a: np.ndarray) -> str:
    """One row per line, 17 significant digits, space separated."""
    a = np.atleast_2d(np.asarray(a, dtype=float))
    return "\n".join(" ".join(f"{x:.17g}" for x in row) for row in a) + "\n"

"""Enumeration of free trees up to isomorphism.

Trees are produced as level sequences rooted at a centre (Wright, Richmond,
Odlyzko and McKay's constant-amortised-time scheme): each free tree appears
once, as the lexicographically largest level sequence of the tree rooted at
its centre, and the sequences arrive in decreasing lexicographic order.
"""
from __future__ import annotations

from typing import Iterator, Sequence

from .graph import Graph, GraphError, from_edge_list

MAX_TREE_ORDER = 16


def _rooted_successor(seq: list[int], p: int | None = None) -> list[int] | None:
    """Next canonical rooted level sequence, modifying from position ``p``."""
    if p is None:
        p = len(seq) - 1
        while seq[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while seq[q] != seq[p] - 1:
        q -= 1
    out = list(seq)
    shift = p - q
    for i in range(p, len(out)):
        out[i] = out[i - shift]
    return out


def _split(seq: Sequence[int]) -> tuple[list[int], list[int]]:
    """Split into the first principal subtree (re-rooted at level 0) and the rest."""
    end = len(seq)
    for i in range(2, len(seq)):
        if seq[i] == 1:
            end = i
            break
    first = [x - 1 for x in seq[1:end]]
    rest = [0] + list(seq[end:])
    return first, rest


def _centred(seq: list[int]) -> list[int]:
    """Return ``seq`` if its root is the canonical centre, else jump ahead."""
    first, rest = _split(seq)
    h_first, h_rest = max(first), max(rest)
    ok = h_rest >= h_first
    if ok and h_rest == h_first:
        # bicentral: orient the central edge canonically
        if len(first) > len(rest) or (len(first) == len(rest) and first > rest):
            ok = False
    if ok:
        return seq
    p = len(first)
    nxt = _rooted_successor(seq, p)
    if seq[p] > 2:
        new_first, _ = _split(nxt)
        tail = list(range(1, max(new_first) + 2))
        nxt[len(nxt) - len(tail):] = tail
    return nxt


def level_sequence_to_graph(seq: Sequence[int]) -> Graph:
    """Vertex ``i`` is position ``i``; its parent is the nearest earlier vertex one level up."""
    pairs = []
    last_at_level: dict[int, int] = {}
    for i, lvl in enumerate(seq):
        if i:
            pairs.append((last_at_level[lvl - 1], i))
        last_at_level[lvl] = i
    return from_edge_list(len(seq), pairs)


def free_tree_level_sequences(n: int) -> Iterator[list[int]]:
    if not 1 <= n <= MAX_TREE_ORDER:
        raise GraphError(f"tree enumeration supports 1 <= n <= {MAX_TREE_ORDER}, got {n}")
    if n == 1:
        yield [0]
        return
    seq: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while seq is not None:
        seq = _centred(seq)
        yield list(seq)
        seq = _rooted_successor(seq)


def enumerate_trees(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class of free trees on ``n`` vertices."""
    for seq in free_tree_level_sequences(n):
        yield level_sequence_to_graph(seq)


def tree_centers(g: Graph) -> list[int]:
    if g.n == 0:
        return []
    deg = g.degrees()
    adj = g.neighbors()
    layer = [v for v in range(g.n) if deg[v] <= 1]
    remaining = g.n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in adj[v]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return sorted(layer)


def tree_canonical_form(g: Graph) -> str:
    """AHU encoding rooted at the centre; the smaller of two for bicentral trees."""
    if g.m != g.n - 1:
        raise GraphError("not a tree")
    adj = g.neighbors()

    def encode(root: int) -> str:
        # iterative post-order to stay clear of recursion limits
        parent = {root: -1}
        order = [root]
        for v in order:
            for w in adj[v]:
                if w != parent[v]:
                    parent[w] = v
                    order.append(w)
        if len(order) != g.n:
            raise GraphError("not a tree")
        code: dict[int, str] = {}
        for v in reversed(order):
            kids = sorted(code[w] for w in adj[v] if w != parent[v])
            code[v] = "(" + "".join(kids) + ")"
        return code[root]

    return min(encode(c) for c in tree_centers(g))

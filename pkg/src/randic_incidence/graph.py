"""Simple undirected graphs: construction, generators and structural queries.

Vertices are ``0..n-1``. Edges are stored as ``(u, v)`` pairs with ``u < v``,
sorted lexicographically; that order is the column order of every incidence
matrix built from the graph.
"""
from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

CLIQUE_CAP = 32


class GraphError(ValueError):
    """Raised for invalid graph input (bad endpoints, loops, duplicates)."""


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"vertex count must be non-negative, got {self.n}")
        prev = None
        for e in self.edges:
            u, v = e
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise GraphError(f"edge {e} is not canonical for n={self.n}")
            if prev is not None and e <= prev:
                raise GraphError("edge list is not strictly sorted")
            prev = e

    @property
    def m(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def neighbors(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self._edge_set

    @property
    def _edge_set(self) -> frozenset:
        # cached on first use; the dataclass is frozen so bypass __setattr__
        try:
            return self.__dict__["_es"]
        except KeyError:
            es = frozenset(self.edges)
            object.__setattr__(self, "_es", es)
            return es

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


@dataclass(frozen=True)
class VertexPartition:
    non_isolated: tuple[int, ...]
    isolated: tuple[int, ...]

    @property
    def r(self) -> int:
        return len(self.non_isolated)


@dataclass(frozen=True)
class StructureReport:
    degrees: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]
    bipartite: bool
    coloring: tuple[int, ...] | None
    clique_number: int


def from_edge_list(n: int, pairs: Iterable[Sequence[int]]) -> Graph:
    """Build a canonical graph; duplicates and loops are rejected, not merged."""
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    seen = set()
    for pair in pairs:
        u, v = (int(x) for x in pair)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"endpoint out of range in ({u}, {v}) for n={n}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise GraphError(f"duplicate edge {e}")
        seen.add(e)
    return Graph(n, tuple(sorted(seen)))


# -- generators -------------------------------------------------------------

def gen_complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return Graph(n, tuple(combinations(range(n), 2)))


def gen_complete_bipartite(x: int, y: int) -> Graph:
    """K_{x,y} with parts ``0..x-1`` and ``x..x+y-1``."""
    if x < 1 or y < 1:
        raise GraphError("complete bipartite graph needs both parts >= 1")
    return Graph(x + y, tuple((i, j) for i in range(x) for j in range(x, x + y)))


def gen_star(n: int) -> Graph:
    """Star S_n; the centre is the last vertex ``n-1``."""
    if n < 2:
        raise GraphError("star needs n >= 2")
    return Graph(n, tuple((i, n - 1) for i in range(n - 1)))


def gen_path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def gen_petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edge_list(10, outer + spokes + inner)


def empty_graph(n: int) -> Graph:
    return Graph(n, ())


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    """Erdos-Renyi G(n, p); isolated vertices are allowed."""
    return Graph(n, tuple(e for e in combinations(range(n), 2) if rng.random() < p))


def random_connected_graph(n: int, rng: random.Random, p: float | None = None) -> Graph:
    """Random spanning tree (uniform attachment) plus G(n, p) extra edges."""
    if n < 1:
        raise GraphError("need n >= 1")
    if p is None:
        p = rng.random()
    order = list(range(n))
    rng.shuffle(order)
    edges = set()
    for i in range(1, n):
        u, v = order[i], order[rng.randrange(i)]
        edges.add((min(u, v), max(u, v)))
    for e in combinations(range(n), 2):
        if e not in edges and rng.random() < p:
            edges.add(e)
    return Graph(n, tuple(sorted(edges)))


# -- edge / vertex operations -------------------------------------------------

def delete_edges(g: Graph, subset: Iterable[Sequence[int]]) -> Graph:
    drop = set()
    for pair in subset:
        u, v = (int(x) for x in pair)
        e = (u, v) if u < v else (v, u)
        if not g.has_edge(*e):
            raise GraphError(f"{e} is not an edge of the graph")
        drop.add(e)
    return Graph(g.n, tuple(e for e in g.edges if e not in drop))


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """G[S], relabelled so that ``vertices[i]`` becomes ``i`` (order kept)."""
    index = {v: i for i, v in enumerate(vertices)}
    pairs = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    return from_edge_list(len(vertices), pairs)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shifted = [(u + g.n, v + g.n) for u, v in h.edges]
    return Graph(g.n + h.n, g.edges + tuple(shifted))


def non_isolated_partition(g: Graph) -> VertexPartition:
    deg = g.degrees()
    w = tuple(i for i in range(g.n) if deg[i] > 0)
    u = tuple(i for i in range(g.n) if deg[i] == 0)
    return VertexPartition(w, u)


def has_isolated_vertices(g: Graph) -> bool:
    return any(d == 0 for d in g.degrees())


def line_graph(g: Graph) -> Graph:
    """Vertex ``i`` of the result is ``g.edges[i]``."""
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for idx, (u, v) in enumerate(g.edges):
        incident[u].append(idx)
        incident[v].append(idx)
    pairs = set()
    for ids in incident:
        pairs.update(combinations(ids, 2))
    return Graph(g.m, tuple(sorted(pairs)))


# -- structural queries -------------------------------------------------------

def components(g: Graph) -> list[tuple[int, ...]]:
    adj = g.neighbors()
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        out.append(tuple(sorted(comp)))
    return out


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(components(g)) == 1


def two_coloring(g: Graph) -> list[int] | None:
    """Proper 2-colouring (0/1 per vertex), or None for non-bipartite graphs.

    Each component's smallest vertex gets colour 0.
    """
    adj = g.neighbors()
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if color[y] == -1:
                    color[y] = 1 - color[x]
                    queue.append(y)
                elif color[y] == color[x]:
                    return None
    return color


def is_bipartite(g: Graph) -> bool:
    return two_coloring(g) is not None


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def is_complete_bipartite(g: Graph) -> bool:
    """Connected, bipartite with parts X, Y and m = |X||Y|."""
    if g.n < 2 or not is_connected(g):
        return False
    color = two_coloring(g)
    if color is None:
        return False
    x = sum(1 for c in color if c == 0)
    return g.m == x * (g.n - x)


def is_star(g: Graph) -> bool:
    return g.n >= 2 and g.m == g.n - 1 and max(g.degrees()) == g.n - 1


def is_path(g: Graph) -> bool:
    if g.n == 1:
        return g.m == 0
    return g.m == g.n - 1 and is_connected(g) and max(g.degrees()) <= 2


def regular_degree(g: Graph) -> int | None:
    deg = g.degrees()
    if not deg or any(d != deg[0] for d in deg):
        return None
    return deg[0]


def clique_number(g: Graph) -> int:
    """Exact clique number by bitset branch and bound.

    Worst case is exponential in n, hence the cap of 32 vertices.
    """
    if g.n > CLIQUE_CAP:
        raise GraphError(f"clique_number supports n <= {CLIQUE_CAP}, got n={g.n}")
    if g.n == 0:
        return 0
    nbr = [0] * g.n
    for u, v in g.edges:
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u
    best = 1

    def expand(size: int, cand: int) -> None:
        nonlocal best
        while cand:
            if size + bin(cand).count("1") <= best:
                return
            v = cand.bit_length() - 1
            cand &= ~(1 << v)
            new = cand & nbr[v]
            if new:
                expand(size + 1, new)
            elif size + 1 > best:
                best = size + 1

    expand(0, (1 << g.n) - 1)
    return best


def structural_queries(g: Graph) -> StructureReport:
    color = two_coloring(g)
    return StructureReport(
        degrees=tuple(g.degrees()),
        components=tuple(components(g)),
        bipartite=color is not None,
        coloring=tuple(color) if color is not None else None,
        clique_number=clique_number(g),
    )

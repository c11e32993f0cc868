"""Machine-checkable reports for the bounds on the Randic incidence energy.

Each ``check_*`` function evaluates both sides of one inequality and reports
whether it holds, whether it is attained (within ``EQ_TOL``), and whether the
graph belongs to the class where equality is expected.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .energy import i_re, singular_values
from .graph import (
    Graph,
    GraphError,
    clique_number,
    delete_edges,
    has_isolated_vertices,
    is_bipartite,
    is_complete,
    is_complete_bipartite,
    is_connected,
    line_graph,
    regular_degree,
)
from .spectra import DEFAULT_TOL, adjacency, incidence, randic_incidence, sym_eigh

EQ_TOL = 1e-9

T2_1 = "T2_1"
T2_2 = "T2_2"
T3_2 = "T3_2"
C3_3 = "C3_3"
T3_4 = "T3_4"
T4_1 = "T4_1"
REG_LINE = "REG_LINE"

ALL_THEOREMS = (T2_1, T2_2, T3_2, C3_3, T3_4, T4_1)


class PreconditionError(GraphError):
    """The graph does not satisfy the hypothesis of the checked statement."""


@dataclass(frozen=True)
class BoundReport:
    theorem_id: str
    relation: str  # ">=", "<=", ">" or "=="
    lhs: float
    rhs: float
    holds: bool
    tight: bool
    expected_equality_class: str
    in_equality_class: bool | None = None
    witness: dict = field(default_factory=dict)

    @property
    def gap(self) -> float:
        return self.lhs - self.rhs

    @property
    def consistent(self) -> bool:
        """Tightness agrees with the equality characterisation (None: not characterised)."""
        return self.in_equality_class is None or self.tight == self.in_equality_class

    def to_row(self) -> dict:
        return {
            "theorem": self.theorem_id,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "holds": self.holds,
            "tight": self.tight,
        }


def _report(theorem, relation, lhs, rhs, eq_class, in_class, eq_tol, witness=None) -> BoundReport:
    tight = abs(lhs - rhs) <= eq_tol
    if relation == ">=":
        holds = lhs >= rhs - eq_tol
    elif relation == "<=":
        holds = lhs <= rhs + eq_tol
    elif relation == ">":
        holds = lhs > rhs
    elif relation == "==":
        holds = tight
    else:
        raise ValueError(relation)
    return BoundReport(theorem, relation, lhs, rhs, holds, tight, eq_class, in_class, witness or {})


def _require_no_isolated(g: Graph, what: str) -> None:
    if g.n == 0 or has_isolated_vertices(g):
        raise PreconditionError(f"{what} needs a non-empty graph without isolated vertices")


def _edge(g: Graph, e) -> tuple[int, int]:
    u, v = (int(x) for x in e)
    if u > v:
        u, v = v, u
    if not g.has_edge(u, v):
        raise PreconditionError(f"({u}, {v}) is not an edge of the graph")
    return u, v


def check_lower_bound(g: Graph, eq_tol: float = EQ_TOL, tol: float = DEFAULT_TOL) -> BoundReport:
    """I_RE(G) >= sqrt(n); equality exactly for K_2."""
    _require_no_isolated(g, T2_1)
    return _report(T2_1, ">=", i_re(g, tol), math.sqrt(g.n), "K_2", g.n == 2 and g.m == 1, eq_tol)


def check_upper_bound(g: Graph, eq_tol: float = EQ_TOL, tol: float = DEFAULT_TOL) -> BoundReport:
    """I_RE(G) <= sqrt(2) + sqrt((n-1)(n-2)); equality exactly for K_n."""
    if g.n < 2:
        raise PreconditionError(f"{T2_2} needs n >= 2")
    _require_no_isolated(g, T2_2)
    rhs = math.sqrt(2) + math.sqrt((g.n - 1) * (g.n - 2))
    return _report(T2_2, "<=", i_re(g, tol), rhs, "K_n", is_complete(g), eq_tol)


def frozen_deletion_energy(g: Graph, subset, tol: float = DEFAULT_TOL) -> float:
    """Energy of I_R(G) with the columns of ``subset`` removed.

    Unlike I_RE(G - E'), the remaining entries keep the degrees of G. Column
    deletion can only shrink singular values, so both deletion inequalities
    always hold in this form.
    """
    drop = {_edge(g, e) for e in subset}
    keep = [j for j, e in enumerate(g.edges) if e not in drop]
    return float(singular_values(randic_incidence(g)[:, keep], tol).values.sum())


def check_monotonicity(g: Graph, subset, eq_tol: float = EQ_TOL, tol: float = DEFAULT_TOL) -> BoundReport:
    """I_RE(G) > I_RE(G - E') for nonempty E'; the raw gap is reported.

    Degrees in G - E' are recomputed, and then the inequality can fail (for
    example on graph6 ``EhMg`` minus edge (0, 1)). ``witness["frozen_rhs"]``
    holds the column-deletion energy, for which it cannot fail.
    """
    edges = sorted({_edge(g, e) for e in subset})
    if not edges:
        raise PreconditionError(f"{T3_2} needs a nonempty edge subset")
    lhs = i_re(g, tol)
    frozen = frozen_deletion_energy(g, edges, tol)
    return _report(T3_2, ">", lhs, i_re(delete_edges(g, edges), tol), "never (strict)", False, eq_tol,
                   {"deleted": edges, "frozen_rhs": frozen, "frozen_holds": lhs > frozen})


def check_clique_bound(g: Graph, eq_tol: float = EQ_TOL, tol: float = DEFAULT_TOL) -> BoundReport:
    """I_RE(G) >= sqrt(2) + sqrt((c-1)(c-2)) with c the clique number."""
    if g.m == 0:
        raise PreconditionError(f"{C3_3} needs at least one edge")
    c = clique_number(g)
    rhs = math.sqrt(2) + math.sqrt((c - 1) * (c - 2))
    # equality is not characterised in general; K_n attains it
    return _report(C3_3, ">=", i_re(g, tol), rhs, "not characterised (K_n attains it)", None, eq_tol,
                   {"clique_number": c})


def edge_deletion_rhs(g: Graph, e, tol: float = DEFAULT_TOL, du: float | None = None, dv: float | None = None) -> float:
    """sqrt(1/d(u) + 1/d(v) + I_RE(G - e)^2), degrees taken in G unless given."""
    u, v = _edge(g, e)
    deg = g.degrees()
    du = deg[u] if du is None else du
    dv = deg[v] if dv is None else dv
    rest = i_re(delete_edges(g, [(u, v)]), tol)
    return math.sqrt(1.0 / du + 1.0 / dv + rest * rest)


def check_edge_deletion(g: Graph, e, eq_tol: float = EQ_TOL, tol: float = DEFAULT_TOL) -> BoundReport:
    """I_RE(G) >= sqrt(1/d(u) + 1/d(v) + I_RE(G-e)^2) for connected G; equality exactly for K_2.

    With I_RE(G - e) taken on the actual subgraph this fails often (K_4 is
    the smallest case). ``witness["frozen_rhs"]`` uses the column-deletion
    energy instead, for which the inequality holds.
    """
    if not is_connected(g):
        raise PreconditionError(f"{T3_4} needs a connected graph")
    u, v = _edge(g, e)
    lhs = i_re(g, tol)
    deg = g.degrees()
    rest = frozen_deletion_energy(g, [(u, v)], tol)
    frozen = math.sqrt(1.0 / deg[u] + 1.0 / deg[v] + rest * rest)
    return _report(T3_4, ">=", lhs, edge_deletion_rhs(g, (u, v), tol), "K_2", g.n == 2, eq_tol,
                   {"edge": (u, v), "frozen_rhs": frozen, "frozen_holds": lhs >= frozen - eq_tol})


def check_bipartite_bound(g: Graph, eq_tol: float = EQ_TOL, tol: float = DEFAULT_TOL) -> BoundReport:
    """I_RE(G) <= n - 2 + sqrt(2) for bipartite G; equality exactly for complete bipartite G."""
    _require_no_isolated(g, T4_1)
    if not is_bipartite(g):
        raise PreconditionError(f"{T4_1} needs a bipartite graph")
    return _report(T4_1, "<=", i_re(g, tol), g.n - 2 + math.sqrt(2), "complete bipartite",
                   is_complete_bipartite(g), eq_tol)


def line_graph_energy(g: Graph, tol: float = DEFAULT_TOL) -> float:
    """sum_i sqrt(2/d + lambda_i(Line(G))/d) for a d-regular graph.

    Each term is evaluated as ``||I(G) u_i|| / sqrt(d)`` with ``u_i`` the
    line-graph eigenvector, using ``2 I_m + A(Line(G)) = I(G)^T I(G)``; the
    direct square root is inaccurate at the (frequent) eigenvalue -2.
    """
    d = regular_degree(g)
    if d is None or d < 1:
        raise PreconditionError("line-graph formula needs a d-regular graph with d >= 1")
    spec, vecs = sym_eigh(adjacency(line_graph(g)), tol)
    if spec.values.min() < -2.0 - 1e-9:
        raise PreconditionError(f"line-graph eigenvalue below -2: {spec.values.min():.6g}")
    terms = np.linalg.norm(incidence(g) @ vecs, axis=0) / math.sqrt(d)
    return float(np.sum(terms))


def check_regular_line_identity(g: Graph, eq_tol: float = EQ_TOL, tol: float = DEFAULT_TOL) -> BoundReport:
    """Energy via the Gram spectrum equals the line-graph sum for regular graphs."""
    rhs = line_graph_energy(g, tol)
    lhs = i_re(g, tol)
    return _report(REG_LINE, "==", lhs, rhs, "always (identity)", True, eq_tol,
                   {"degree": regular_degree(g)})


def applicable_checks(g: Graph, eq_tol: float = EQ_TOL, tol: float = DEFAULT_TOL) -> dict[str, BoundReport | str]:
    """Run every check whose hypothesis holds; others map to ``"skipped(<reason>)"``.

    The subset-dependent checks use the first edge in canonical order.
    """
    out: dict[str, BoundReport | str] = {}
    first = g.edges[0] if g.edges else None
    calls = {
        T2_1: lambda: check_lower_bound(g, eq_tol, tol),
        T2_2: lambda: check_upper_bound(g, eq_tol, tol),
        T3_2: lambda: check_monotonicity(g, [first] if first else [], eq_tol, tol),
        C3_3: lambda: check_clique_bound(g, eq_tol, tol),
        T3_4: lambda: check_edge_deletion(g, first if first else (0, 0), eq_tol, tol),
        T4_1: lambda: check_bipartite_bound(g, eq_tol, tol),
    }
    reasons = {
        T2_1: "isolated vertex",
        T2_2: "isolated vertex or n<2",
        T3_2: "no edges",
        C3_3: "no edges",
        T3_4: "not connected" if not is_connected(g) else "no edges",
        T4_1: "not bipartite" if not is_bipartite(g) else "isolated vertex",
    }
    for name, fn in calls.items():
        try:
            out[name] = fn()
        except PreconditionError:
            out[name] = f"skipped({reasons[name]})"
        except GraphError as exc:  # e.g. clique-number size cap
            out[name] = f"skipped({exc})"
    if regular_degree(g):
        out[REG_LINE] = check_regular_line_identity(g, eq_tol, tol)
    return out

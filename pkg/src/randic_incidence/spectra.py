"""Matrices attached to a graph and a checked symmetric eigensolver.

All matrices are dense ``float64`` numpy arrays. Symmetric ones are written
through their upper triangle and mirrored, so they are exactly symmetric.
Rectangular (vertex x edge) matrices use the graph's canonical edge order
for their columns.
"""
from __future__ import annotations

import contextlib
import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .graph import Graph, GraphError, has_isolated_vertices, line_graph

DEFAULT_TOL = 1e-10


class EigenSolverError(ArithmeticError):
    """The eigensolver did not converge or failed its residual contract."""


@dataclass(frozen=True, eq=False)
class Spectrum:
    values: np.ndarray  # descending
    residual_tol: float

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values.tolist())


def _symmetric(n: int, upper: dict[tuple[int, int], float], diag=None) -> np.ndarray:
    a = np.zeros((n, n))
    if diag is not None:
        a[np.arange(n), np.arange(n)] = diag
    for (i, j), x in upper.items():
        a[i, j] = x
        a[j, i] = x
    return a


def adjacency(g: Graph) -> np.ndarray:
    return _symmetric(g.n, {e: 1.0 for e in g.edges})


def degree_matrix(g: Graph) -> np.ndarray:
    return np.diag(np.asarray(g.degrees(), dtype=float))


def randic_matrix(g: Graph) -> np.ndarray:
    deg = g.degrees()
    return _symmetric(g.n, {(u, v): 1.0 / math.sqrt(deg[u] * deg[v]) for u, v in g.edges})


def signless_laplacian(g: Graph) -> np.ndarray:
    return _symmetric(g.n, {e: 1.0 for e in g.edges}, diag=g.degrees())


def normalized_signless_laplacian(g: Graph) -> np.ndarray:
    """D^{-1/2} Q D^{-1/2}, i.e. I + R. Only defined without isolated vertices."""
    if has_isolated_vertices(g):
        raise GraphError("normalized signless Laplacian needs a graph without isolated vertices")
    deg = g.degrees()
    return _symmetric(
        g.n,
        {(u, v): 1.0 / math.sqrt(deg[u] * deg[v]) for u, v in g.edges},
        diag=np.ones(g.n),
    )


def incidence(g: Graph) -> np.ndarray:
    return general_randic_incidence(g, 0.0)


def randic_incidence(g: Graph) -> np.ndarray:
    """Entry (i, j) is d_i^{-1/2} when vertex i lies on edge j."""
    deg = g.degrees()
    out = np.zeros((g.n, g.m))
    for j, (u, v) in enumerate(g.edges):
        out[u, j] = 1.0 / math.sqrt(deg[u])
        out[v, j] = 1.0 / math.sqrt(deg[v])
    return out


def general_randic_incidence(g: Graph, alpha: float) -> np.ndarray:
    """Entry (i, j) is d_i**alpha when vertex i lies on edge j.

    ``alpha = -0.5`` gives :func:`randic_incidence` bit for bit and
    ``alpha = 0`` the plain incidence matrix.
    """
    if alpha == -0.5:
        return randic_incidence(g)
    deg = g.degrees()
    out = np.zeros((g.n, g.m))
    for j, (u, v) in enumerate(g.edges):
        out[u, j] = float(deg[u]) ** alpha
        out[v, j] = float(deg[v]) ** alpha
    return out


def edge_gram(g: Graph) -> np.ndarray:
    """I_R^T I_R assembled entry by entry from the endpoint degrees."""
    deg = g.degrees()
    upper = {}
    diag = [1.0 / deg[u] + 1.0 / deg[v] for u, v in g.edges]
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for idx, (u, v) in enumerate(g.edges):
        incident[u].append(idx)
        incident[v].append(idx)
    for k, ids in enumerate(incident):
        for a in range(len(ids)):
            for b in range(a + 1, len(ids)):
                upper[(ids[a], ids[b])] = 1.0 / deg[k]
    return _symmetric(g.m, upper, diag=diag)


def line_graph_adjacency(g: Graph) -> np.ndarray:
    return adjacency(line_graph(g))


# -- eigensolver --------------------------------------------------------------

_override = None


@contextlib.contextmanager
def eigensolver_override(fn):
    """Temporarily replace the raw kernel ``fn(a) -> (w, v, sweeps)``.

    Intended for fault-injection tests of the verification harness.
    """
    global _override
    saved, _override = _override, fn
    try:
        yield
    finally:
        _override = saved


def _raw_eigh(a: np.ndarray):
    kernel = _override if _override is not None else _kernels.jacobi_eigh
    return kernel(a)


def sym_eigh(m: np.ndarray, tol: float = DEFAULT_TOL) -> tuple[Spectrum, np.ndarray]:
    """Checked eigendecomposition; eigenvector columns follow the descending values.

    Every eigenpair must satisfy ``||M v - lam v||_2 <= tol * max(1, ||M||_inf)``,
    the eigenvectors must be orthonormal and the eigenvalues must sum to the
    trace within ``n * tol``. Violations raise :class:`EigenSolverError`.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    a = np.asarray(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    if n == 0:
        return Spectrum(np.zeros(0), tol), np.zeros((0, 0))
    if not np.array_equal(a, a.T):
        raise ValueError("matrix is not symmetric")
    w, v, sweeps = _raw_eigh(a)
    if sweeps < 0:
        raise EigenSolverError("Jacobi iteration hit the sweep cap without converging")
    w = np.asarray(w, dtype=float)
    v = np.asarray(v, dtype=float)
    if w.shape != (n,) or v.shape != (n, n):
        raise EigenSolverError("eigensolver returned arrays of the wrong shape")
    bound = tol * max(1.0, float(np.max(np.sum(np.abs(a), axis=1))))
    resid = np.linalg.norm(a @ v - v * w, axis=0)
    ortho = float(np.max(np.abs(v.T @ v - np.eye(n))))
    if not ortho <= 1e-8:
        raise EigenSolverError(f"eigenvectors are not orthonormal (deviation {ortho:.3g})")
    if not np.all(np.isfinite(resid)) or np.any(resid > bound):
        raise EigenSolverError(f"eigenpair residual {float(np.max(resid)):.3g} exceeds {bound:.3g}")
    if abs(float(np.sum(w)) - float(np.trace(a))) > n * tol:
        raise EigenSolverError("eigenvalues do not sum to the trace")
    order = np.argsort(-w, kind="stable")
    return Spectrum(w[order], tol), v[:, order]


def sym_eigenvalues(m: np.ndarray, tol: float = DEFAULT_TOL) -> Spectrum:
    """Full spectrum of a symmetric matrix, sorted descending (see :func:`sym_eigh`)."""
    return sym_eigh(m, tol)[0]

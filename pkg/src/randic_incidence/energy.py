"""Randic incidence energy and the comparison energies."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .graph import Graph, induced_subgraph, non_isolated_partition
from .spectra import (
    DEFAULT_TOL,
    EigenSolverError,
    Spectrum,
    edge_gram,
    general_randic_incidence,
    incidence,
    normalized_signless_laplacian,
    randic_incidence,
    signless_laplacian,
    sym_eigh,
)

CLIP_TOL = 1e-9


class Variant(str, enum.Enum):
    RANDIC_INCIDENCE = "RANDIC_INCIDENCE"
    INCIDENCE = "INCIDENCE"
    GENERAL_ALPHA = "GENERAL_ALPHA"
    RANDIC_INDEX = "RANDIC_INDEX"


@dataclass(frozen=True, eq=False)
class EnergyResult:
    variant: Variant
    value: float
    spectrum_used: Spectrum
    n: int
    m: int
    alpha: float | None = None
    metadata: dict = field(default_factory=dict)

    @property
    def sigma(self) -> list[float]:
        return self.spectrum_used.values.tolist()

    def to_record(self) -> dict:
        return {
            "variant": self.variant.value,
            "alpha": self.alpha,
            "n": self.n,
            "m": self.m,
            "value": self.value,
            "sigma": self.sigma,
        }


def gram(a: np.ndarray) -> np.ndarray:
    """``a @ a.T`` made exactly symmetric (upper triangle mirrored)."""
    p = a @ a.T
    return np.triu(p) + np.triu(p, 1).T


def _check_psd(eigs: np.ndarray, clip_tol: float) -> None:
    if eigs.size and eigs.min() < -clip_tol:
        raise EigenSolverError(f"Gram eigenvalue {eigs.min():.3g} below -{clip_tol:g}")


def _padded(sig: np.ndarray, n: int, tol: float) -> Spectrum:
    out = np.zeros(n)
    k = min(n, sig.size)
    out[:k] = np.sort(sig)[::-1][:k]
    return Spectrum(out, tol)


def _sigma_from_gram(b: np.ndarray, g: np.ndarray, vertex_side: bool, tol: float, clip_tol: float) -> np.ndarray:
    """Singular values of ``b`` from an eigendecomposition of its Gram ``g``.

    ``sigma_i = ||b^T v_i||`` (vertex side) or ``||b u_i||`` (edge side) rather
    than ``sqrt(lambda_i)``: both agree in exact arithmetic, but the square
    root turns a roundoff-level zero eigenvalue (~1e-17) into an error of
    ~1e-9 in sigma, while the norm keeps it at roundoff level.
    """
    spec, vecs = sym_eigh(g, tol)
    _check_psd(spec.values, clip_tol)
    proj = b.T @ vecs if vertex_side else b @ vecs
    return np.linalg.norm(proj, axis=0)


def singular_values(a: np.ndarray, tol: float = DEFAULT_TOL, clip_tol: float = CLIP_TOL) -> Spectrum:
    """Singular values of a rows x cols matrix, zero-padded to ``rows`` entries.

    Uses whichever of ``a a^T`` and ``a^T a`` is smaller.
    """
    rows, cols = a.shape
    if rows == 0 or cols == 0:
        return Spectrum(np.zeros(rows), tol)
    if rows <= cols:
        sig = _sigma_from_gram(a, gram(a), True, tol, clip_tol)
    else:
        sig = _sigma_from_gram(a, gram(a.T), False, tol, clip_tol)
    return _padded(sig, rows, tol)


def randic_incidence_singular_values(
    g: Graph,
    tol: float = DEFAULT_TOL,
    clip_tol: float = CLIP_TOL,
    route: str = "auto",
) -> Spectrum:
    """Singular values of I_R(G), descending, exactly ``n`` of them.

    ``route`` picks the decomposition: ``"vertex"`` (I_R I_R^T),
    ``"edge"`` (the edge Gram built entry by entry from degrees),
    ``"normalized"`` (normalized signless Laplacian of the non-isolated part)
    or ``"auto"`` (vertex Gram when n <= m, else edge Gram).
    """
    if route == "auto":
        route = "vertex" if g.n <= g.m else "edge"
    if g.m == 0:
        return Spectrum(np.zeros(g.n), tol)
    if route == "vertex":
        b = randic_incidence(g)
        sig = _sigma_from_gram(b, gram(b), True, tol, clip_tol)
    elif route == "edge":
        sig = _sigma_from_gram(randic_incidence(g), edge_gram(g), False, tol, clip_tol)
    elif route == "normalized":
        h = induced_subgraph(g, non_isolated_partition(g).non_isolated)
        sig = _sigma_from_gram(randic_incidence(h), normalized_signless_laplacian(h), True, tol, clip_tol)
    else:
        raise ValueError(f"unknown route {route!r}")
    return _padded(sig, g.n, tol)


def randic_incidence_energy(g: Graph, tol: float = DEFAULT_TOL, route: str = "auto") -> EnergyResult:
    sv = randic_incidence_singular_values(g, tol, route=route)
    return EnergyResult(Variant.RANDIC_INCIDENCE, float(np.sum(sv.values)), sv, g.n, g.m)


def i_re(g: Graph, tol: float = DEFAULT_TOL) -> float:
    """Shorthand for the Randic incidence energy value."""
    return randic_incidence_energy(g, tol).value


def incidence_energy(g: Graph, tol: float = DEFAULT_TOL) -> EnergyResult:
    """Sum of square roots of the signless Laplacian eigenvalues."""
    if g.m == 0:
        sv = Spectrum(np.zeros(g.n), tol)
    else:
        sv = _padded(_sigma_from_gram(incidence(g), signless_laplacian(g), True, tol, CLIP_TOL), g.n, tol)
    return EnergyResult(Variant.INCIDENCE, float(np.sum(sv.values)), sv, g.n, g.m)


def general_randic_incidence_energy(g: Graph, alpha: float, tol: float = DEFAULT_TOL) -> EnergyResult:
    alpha = float(alpha)
    sv = singular_values(general_randic_incidence(g, alpha), tol)
    meta = {"degenerate_alpha": True} if alpha == 0.0 else {}
    return EnergyResult(Variant.GENERAL_ALPHA, float(np.sum(sv.values)), sv, g.n, g.m, alpha, meta)


def randic_index(g: Graph) -> float:
    deg = g.degrees()
    return math.fsum(1.0 / math.sqrt(deg[u] * deg[v]) for u, v in g.edges)

"""Cyclic Jacobi eigensolver, pure Python/numpy fallback.

Performs the same rotations in the same order as ``_jacobi.pyx``.
"""
from __future__ import annotations

import math

import numpy as np

EPS = np.finfo(float).eps


def jacobi_eigh(a, abs_floor=1e-18, max_sweeps=100):
    """Eigen-decompose a symmetric matrix.

    Returns ``(w, v, sweeps)`` with ``a @ v[:, k] ~ w[k] * v[:, k]``;
    ``w`` is unsorted. ``sweeps`` is -1 when the sweep cap was hit.
    An off-diagonal entry is dropped once it is below ``abs_floor * ||a||_F``
    or below machine epsilon relative to its two diagonal entries.
    """
    a = np.array(a, dtype=float, order="C")
    n = a.shape[0]
    v = np.eye(n)
    floor = abs_floor * math.sqrt(float(np.sum(a * a)))
    for sweep in range(1, max_sweeps + 1):
        rotations = 0
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                app = a[p, p]
                aqq = a[q, q]
                if abs(apq) <= floor or abs(apq) <= EPS * math.sqrt(abs(app * aqq)):
                    a[p, q] = a[q, p] = 0.0
                    continue
                theta = (aqq - app) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                cp = a[:, p].copy()
                cq = a[:, q]
                newp = c * cp - s * cq
                newq = s * cp + c * cq
                a[:, p] = newp
                a[:, q] = newq
                a[p, :] = newp
                a[q, :] = newq
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = a[q, p] = 0.0
                vp = v[:, p].copy()
                vq = v[:, q]
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
                rotations += 1
        if rotations == 0:
            return np.diag(a).copy(), v, sweep
    return np.diag(a).copy(), v, -1

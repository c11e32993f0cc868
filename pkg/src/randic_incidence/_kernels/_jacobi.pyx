# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Cyclic Jacobi eigensolver, compiled core.

Same rotation sequence as ``jacobi_py.jacobi_eigh``.
"""
import numpy as np

from libc.math cimport fabs, sqrt

cdef double EPS = 2.220446049250313e-16


def jacobi_eigh(a, double abs_floor=1e-18, int max_sweeps=100):
    cdef double[:, ::1] A = np.array(a, dtype=np.float64, order="C")
    cdef Py_ssize_t n = A.shape[0]
    v_arr = np.eye(n)
    cdef double[:, ::1] V = v_arr
    cdef Py_ssize_t p, q, r
    cdef int sweep, rotations
    cdef double apq, app, aqq, theta, t, c, s, x, y, floor, total = 0.0

    for p in range(n):
        for q in range(n):
            total += A[p, q] * A[p, q]
    floor = abs_floor * sqrt(total)

    for sweep in range(1, max_sweeps + 1):
        rotations = 0
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                app = A[p, p]
                aqq = A[q, q]
                if fabs(apq) <= floor or fabs(apq) <= EPS * sqrt(fabs(app * aqq)):
                    A[p, q] = 0.0
                    A[q, p] = 0.0
                    continue
                theta = (aqq - app) / (2.0 * apq)
                if fabs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = 1.0 / (fabs(theta) + sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / sqrt(t * t + 1.0)
                s = t * c
                for r in range(n):
                    x = A[r, p]
                    y = A[r, q]
                    A[r, p] = c * x - s * y
                    A[r, q] = s * x + c * y
                for r in range(n):
                    A[p, r] = A[r, p]
                    A[q, r] = A[r, q]
                A[p, p] = app - t * apq
                A[q, q] = aqq + t * apq
                A[p, q] = 0.0
                A[q, p] = 0.0
                for r in range(n):
                    x = V[r, p]
                    y = V[r, q]
                    V[r, p] = c * x - s * y
                    V[r, q] = s * x + c * y
                rotations += 1
        if rotations == 0:
            return np.array([A[r, r] for r in range(n)]), v_arr, sweep
    return np.array([A[r, r] for r in range(n)]), v_arr, -1

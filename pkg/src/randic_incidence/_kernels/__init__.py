"""Numerical kernels with a compiled core and a pure-Python fallback.

The compiled extension is used when it imports; setting the environment
variable ``RANDIC_INCIDENCE_PURE=1`` forces the fallback.
"""
import os

from . import jacobi_py

BACKEND = "python"
jacobi_eigh = jacobi_py.jacobi_eigh

if not os.environ.get("RANDIC_INCIDENCE_PURE"):
    try:
        from ._jacobi import jacobi_eigh  # noqa: F811
        BACKEND = "compiled"
    except ImportError:
        pass

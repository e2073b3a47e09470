"""Row-cyclic Jacobi sweep kernel.

One source function, compiled two ways: numba @njit when available, and the
plain interpreted version as fallback. Set LAPBOUNDS_DISABLE_NUMBA=1 to force
the numpy/Python path (the two produce bit-identical results since they run
the same code). benchmarks/jacobi_bench.py compares the two.
"""

from __future__ import annotations

import math
import os

import numpy as np

try:
    from numba import njit

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAS_NUMBA = False

_DISABLED = os.environ.get("LAPBOUNDS_DISABLE_NUMBA", "") == "1"


def _off_norm(a: np.ndarray, n: int) -> float:
    acc = 0.0
    for i in range(n - 1):
        for j in range(i + 1, n):
            acc += a[i, j] * a[i, j]
    return math.sqrt(2.0 * acc)


def _jacobi_sweeps(a: np.ndarray, tol: float, max_sweeps: int):
    """Diagonalize symmetric a in place by row-cyclic Jacobi rotations.

    Returns (sweeps_used, final_off_norm). Convergence: off-diagonal
    Frobenius norm <= tol. Rotation order is fixed (p, q) row-cyclic so
    results are reproducible.
    """
    n = a.shape[0]
    for sweep in range(max_sweeps):
        off = 0.0
        for i in range(n - 1):
            for j in range(i + 1, n):
                off += a[i, j] * a[i, j]
        off = math.sqrt(2.0 * off)
        if off <= tol:
            return sweep, off
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if theta >= 0.0:
                    t = 1.0 / (theta + math.sqrt(theta * theta + 1.0))
                else:
                    t = -1.0 / (-theta + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                tau = s / (1.0 + c)
                app = a[p, p]
                aqq = a[q, q]
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
                for i in range(n):
                    if i != p and i != q:
                        aip = a[i, p]
                        aiq = a[i, q]
                        a[i, p] = aip - s * (aiq + tau * aip)
                        a[i, q] = aiq + s * (aip - tau * aiq)
                        a[p, i] = a[i, p]
                        a[q, i] = a[i, q]
    off = 0.0
    for i in range(n - 1):
        for j in range(i + 1, n):
            off += a[i, j] * a[i, j]
    return max_sweeps, math.sqrt(2.0 * off)


if HAS_NUMBA:
    _jacobi_sweeps_jit = njit(cache=True)(_jacobi_sweeps)


def jacobi_sweeps(a: np.ndarray, tol: float, max_sweeps: int):
    """Dispatch to the jit kernel unless numba is absent or disabled."""
    if HAS_NUMBA and not _DISABLED:
        return _jacobi_sweeps_jit(a, tol, max_sweeps)
    return _jacobi_sweeps(a, tol, max_sweeps)

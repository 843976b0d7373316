"""Dense symmetric eigenvalue kernel with two interchangeable backends.

The cyclic Jacobi sweep is the one numeric hot spot in this package: it costs
O(n^3) per sweep, while everything else is O(n*d) table work.  When numba is
importable the scalar-loop kernel is JIT-compiled; otherwise a vectorized
numpy fallback runs the identical rotation sequence.  Set
``ROTMAPS_BACKEND=numpy`` (or ``numba``) to force a backend; see
``benchmarks/bench_jacobi.py`` for a timing comparison.
"""

from __future__ import annotations

import math
import os
import warnings

import numpy as np

ENV_BACKEND = "ROTMAPS_BACKEND"

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only when numba is absent
    HAVE_NUMBA = False


def _offdiag_norm_numpy(a: np.ndarray) -> float:
    # sum only the off-diagonal squares; subtracting the diagonal from the
    # total would cancel catastrophically once the norm is tiny
    off = a - np.diag(np.diag(a))
    return math.sqrt(float(np.sum(off * off)))


def jacobi_sweeps_numpy(a: np.ndarray, tol: float, max_sweeps: int):
    """Cyclic-by-row Jacobi on ``a`` in place; returns (diagonal, sweeps, off_norm).

    Row/column rotation updates are vectorized; the pivot loop stays in
    Python.  Stops once the off-diagonal Frobenius norm is at most ``tol``
    or after ``max_sweeps`` full sweeps, whichever comes first.
    """
    n = a.shape[0]
    sweeps = 0
    off = _offdiag_norm_numpy(a)
    while off > tol and sweeps < max_sweeps:
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                diff = a[q, q] - a[p, p]
                if abs(apq) < 1e-36 * abs(diff):
                    t = apq / diff
                else:
                    theta = diff / (2.0 * apq)
                    t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = 0.0
                a[q, p] = 0.0
        sweeps += 1
        off = _offdiag_norm_numpy(a)
    return np.diag(a).copy(), sweeps, off


def _offdiag_norm_loops(a):
    n = a.shape[0]
    total = 0.0
    for i in range(n):
        for j in range(n):
            if i != j:
                total += a[i, j] * a[i, j]
    return math.sqrt(total)


def _jacobi_sweeps_loops(a, tol, max_sweeps):
    # same rotation sequence as jacobi_sweeps_numpy, written for compilation
    n = a.shape[0]
    sweeps = 0
    off = _offdiag_norm_loops(a)
    while off > tol and sweeps < max_sweeps:
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                diff = a[q, q] - a[p, p]
                if abs(apq) < 1e-36 * abs(diff):
                    t = apq / diff
                else:
                    theta = diff / (2.0 * apq)
                    t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                for k in range(n):
                    akp = a[k, p]
                    akq = a[k, q]
                    a[k, p] = c * akp - s * akq
                    a[k, q] = s * akp + c * akq
                for k in range(n):
                    apk = a[p, k]
                    aqk = a[q, k]
                    a[p, k] = c * apk - s * aqk
                    a[q, k] = s * apk + c * aqk
                a[p, q] = 0.0
                a[q, p] = 0.0
        sweeps += 1
        off = _offdiag_norm_loops(a)
    diag = np.empty(n, dtype=np.float64)
    for i in range(n):
        diag[i] = a[i, i]
    return diag, sweeps, off


if HAVE_NUMBA:
    _offdiag_norm_loops = njit(cache=True)(_offdiag_norm_loops)
    jacobi_sweeps_numba = njit(cache=True)(_jacobi_sweeps_loops)
else:  # pragma: no cover
    jacobi_sweeps_numba = None


def available_backends() -> tuple[str, ...]:
    return ("numba", "numpy") if HAVE_NUMBA else ("numpy",)


def default_backend() -> str:
    """Backend chosen by ``ROTMAPS_BACKEND``; numba when available otherwise."""
    choice = os.environ.get(ENV_BACKEND, "").strip().lower()
    if choice == "numpy":
        return "numpy"
    if choice == "numba":
        if not HAVE_NUMBA:  # pragma: no cover
            warnings.warn(f"{ENV_BACKEND}=numba requested but numba is not importable; using numpy")
            return "numpy"
        return "numba"
    if choice:
        raise ValueError(f"unknown {ENV_BACKEND} value {choice!r}; expected 'numba' or 'numpy'")
    return "numba" if HAVE_NUMBA else "numpy"


def jacobi_eigenvalues(matrix, tol: float, max_sweeps: int, backend: str | None = None):
    """Run cyclic Jacobi sweeps on a float64 copy of ``matrix``.

    Returns (eigenvalue estimates in diagonal order, sweeps used, final
    off-diagonal norm).  The caller decides whether the final norm counts
    as converged.  The input is never modified.
    """
    a = np.array(matrix, dtype=np.float64, order="C", copy=True)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"need a square matrix, got shape {a.shape}")
    name = backend if backend is not None else default_backend()
    if name == "numba":
        if not HAVE_NUMBA:
            raise ValueError("numba backend requested but numba is not importable")
        return jacobi_sweeps_numba(a, float(tol), int(max_sweeps))
    if name == "numpy":
        return jacobi_sweeps_numpy(a, float(tol), int(max_sweeps))
    raise ValueError(f"unknown backend {name!r}; expected 'numba' or 'numpy'")

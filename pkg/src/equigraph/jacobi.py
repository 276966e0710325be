"""Cyclic Jacobi eigensolver for dense symmetric matrices.

This is the independent numeric oracle for every closed-form spectrum
in the package, so it deliberately avoids LAPACK: plain two-sided
rotations, cyclic-by-row sweeps, with a hard sweep limit.
"""

from __future__ import annotations

import math

import numpy as np

__all__ = ["JacobiConvergenceError", "jacobi_eigenvalues"]

ROTATION_THRESHOLD = 1e-14
MAX_SWEEPS = 100


class JacobiConvergenceError(RuntimeError):
    pass


def _off_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.sqrt(np.sum(np.square(off))))


def jacobi_eigenvalues(matrix: np.ndarray) -> np.ndarray:
    """All eigenvalues of a symmetric matrix, ascending, via cyclic Jacobi.

    Sweeps stop once the off-diagonal Frobenius norm drops below
    1e-12 * n; rotations with |a_pq| <= 1e-14 are skipped.
    """
    a = np.array(matrix, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    if not np.allclose(a, a.T, atol=1e-12):
        raise ValueError("matrix must be symmetric")
    n = a.shape[0]
    if n == 1:
        return np.array([a[0, 0]])

    target = 1e-12 * n
    for _ in range(MAX_SWEEPS):
        if _off_norm(a) <= target:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= ROTATION_THRESHOLD:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                cp = a[:, p].copy()
                cq = a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
                a[p, q] = 0.0
                a[q, p] = 0.0
    else:
        raise JacobiConvergenceError(
            f"off-diagonal norm {_off_norm(a):.3e} above {target:.3e} after {MAX_SWEEPS} sweeps"
        )
    return np.sort(np.diag(a))

"""Dense real linear-algebra kernels.

Everything above this module is built from three operations on plain
``numpy`` arrays: a Cholesky factorization, a cyclic-Jacobi symmetric
eigensolver and matrix functions of symmetric matrices.  All kernels are
pure: inputs are never mutated and outputs are fresh arrays.

The eigensolver is deliberately self-contained (no LAPACK): cyclic Jacobi
rotations, converged when the off-diagonal Frobenius mass drops below
``tol * ||A||_F``, hard-capped at a fixed number of sweeps.  That is slow
compared to a tuned library but unconditionally stable and more than fast
enough for the matrix sizes this package targets (dimension <= a few
hundred).
"""

from __future__ import annotations

import math
from typing import Callable

import numpy as np

from .errors import DimensionMismatch, DomainError, NoConvergence, NotPositiveDefinite
from .tolerances import DEFAULT, Tolerances

__all__ = [
    "as_matrix",
    "max_norm",
    "require_square",
    "require_symmetric",
    "cholesky",
    "solve_lower",
    "sym_eigen",
    "sym_func",
]


def as_matrix(a) -> np.ndarray:
    """Coerce to a 2-D float64 array and reject non-finite entries."""
    m = np.asarray(a, dtype=float)
    if m.ndim != 2:
        raise DimensionMismatch(f"expected a 2-D matrix, got ndim={m.ndim}")
    if not np.all(np.isfinite(m)):
        raise DomainError("matrix contains NaN or Inf entries")
    return m


def max_norm(a) -> float:
    """Entrywise max-abs norm; 0.0 for an empty array."""
    m = np.asarray(a)
    return float(np.max(np.abs(m))) if m.size else 0.0


def require_square(a) -> np.ndarray:
    m = as_matrix(a)
    if m.shape[0] != m.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {m.shape}")
    return m


def require_symmetric(a, tol: float | None = None) -> np.ndarray:
    """Validate symmetry within a relative tolerance and return the exactly
    symmetrized copy (rounding drift is averaged away)."""
    m = require_square(a)
    limit = (1e-8 if tol is None else tol) * max(1.0, max_norm(m))
    asym = max_norm(m - m.T)
    if asym > limit:
        raise DomainError(
            f"matrix is not symmetric: max |A - A^T| = {asym:.3e} exceeds {limit:.3e}"
        )
    return (m + m.T) / 2.0


def cholesky(a, tol: float | None = None) -> np.ndarray:
    """Lower-triangular L with ``L @ L.T == a`` for a symmetric
    positive-definite matrix.

    Raises :class:`NotPositiveDefinite` as soon as a pivot <= 0 appears,
    which for covariance matrices signals an unphysical or rank-deficient
    input.
    """
    m = require_symmetric(a, tol)
    n = m.shape[0]
    lower = np.zeros_like(m)
    for j in range(n):
        pivot = m[j, j] - lower[j, :j] @ lower[j, :j]
        if pivot <= 0.0:
            raise NotPositiveDefinite(
                f"pivot {pivot:.3e} at index {j}; matrix is not positive definite"
            )
        lower[j, j] = math.sqrt(pivot)
        if j + 1 < n:
            lower[j + 1 :, j] = (m[j + 1 :, j] - lower[j + 1 :, :j] @ lower[j, :j]) / lower[j, j]
    return lower


def solve_lower(lower: np.ndarray, rhs: np.ndarray) -> np.ndarray:
    """Forward substitution: solve ``lower @ x = rhs`` for lower-triangular
    `lower` (columns of `rhs` solved together)."""
    n = lower.shape[0]
    b = np.asarray(rhs, dtype=float)
    vector = b.ndim == 1
    x = np.array(b, dtype=float, ndmin=2).T if vector else b.copy()
    for i in range(n):
        x[i] = (x[i] - lower[i, :i] @ x[:i]) / lower[i, i]
    return x[:, 0] if vector else x


def _offdiag_frobenius(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.sqrt(np.sum(off * off)))


def sym_eigen(
    a,
    tolerances: Tolerances = DEFAULT,
) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (descending) and orthogonal eigenvectors of a symmetric
    matrix, by cyclic Jacobi rotations.

    Returns ``(vals, vecs)`` with ``a @ vecs == vecs @ diag(vals)`` and
    ``vecs.T @ vecs == I``; column ``vecs[:, i]`` belongs to ``vals[i]``.
    Convergence: off-diagonal Frobenius mass <= ``jacobi_offdiag * ||a||_F``,
    at most ``jacobi_max_sweeps`` sweeps, else :class:`NoConvergence`.
    For degenerate eigenvalues the returned basis of the eigenspace is
    arbitrary (orthonormal, but otherwise meaningless).
    """
    m = require_symmetric(a)
    n = m.shape[0]
    vecs = np.eye(n)
    if n == 1:
        return m.copy().reshape(1), vecs

    fro = float(np.sqrt(np.sum(m * m)))
    if fro == 0.0:
        return np.zeros(n), vecs
    threshold = tolerances.jacobi_offdiag * fro
    # Rotations below this per-element size are skipped; if every element is
    # under it, total off-diagonal mass is below the sweep threshold anyway.
    skip = threshold / (2.0 * n * n)

    for _ in range(tolerances.jacobi_max_sweeps):
        if _offdiag_frobenius(m) <= threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = m[p, q]
                if abs(apq) <= skip:
                    continue
                # classic stable rotation angle
                diff = m[q, q] - m[p, p]
                if abs(apq) < 1e-300 * abs(diff):
                    t = apq / diff
                else:
                    theta = diff / (2.0 * apq)
                    t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                app, aqq = m[p, p], m[q, q]
                col_p, col_q = m[:, p].copy(), m[:, q].copy()
                m[:, p] = c * col_p - s * col_q
                m[:, q] = s * col_p + c * col_q
                row_p, row_q = m[p, :].copy(), m[q, :].copy()
                m[p, :] = c * row_p - s * row_q
                m[q, :] = s * row_p + c * row_q
                # exact updates for the rotated 2x2 block
                m[p, p] = app - t * apq
                m[q, q] = aqq + t * apq
                m[p, q] = 0.0
                m[q, p] = 0.0
                vec_p, vec_q = vecs[:, p].copy(), vecs[:, q].copy()
                vecs[:, p] = c * vec_p - s * vec_q
                vecs[:, q] = s * vec_p + c * vec_q
    else:
        raise NoConvergence(
            f"Jacobi sweep cap ({tolerances.jacobi_max_sweeps}) exceeded; "
            f"off-diagonal mass {_offdiag_frobenius(m):.3e} vs threshold {threshold:.3e}"
        )

    vals = np.diag(m).copy()
    order = np.argsort(-vals, kind="stable")
    return vals[order], vecs[:, order]


def sym_func(
    a,
    f: Callable[[np.ndarray], np.ndarray],
    tolerances: Tolerances = DEFAULT,
) -> np.ndarray:
    """Apply a scalar map to a symmetric matrix through its spectrum:
    ``f(A) = V diag(f(vals)) V^T``.

    Raises :class:`DomainError` if `f` produces a non-finite value on any
    eigenvalue (e.g. sqrt of a negative spectrum).
    """
    vals, vecs = sym_eigen(a, tolerances)
    with np.errstate(all="ignore"):
        fvals = np.asarray(f(vals), dtype=float)
    if fvals.shape != vals.shape:
        raise DomainError("scalar map must return one value per eigenvalue")
    if not np.all(np.isfinite(fvals)):
        bad = vals[~np.isfinite(fvals)]
        raise DomainError(f"eigenvalue(s) outside the domain of the scalar map: {bad}")
    return (vecs * fvals) @ vecs.T

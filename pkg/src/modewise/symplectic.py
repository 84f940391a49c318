"""The symplectic form, symplecticity predicates and random symplectics.

All coordinates are interleaved (q0, p0, q1, p1, ...); see
:mod:`modewise.matrices`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .densecore import max_norm, require_square, sym_eigen
from .errors import DimensionMismatch, DomainError
from .matrices import CovarianceMatrix, SymplecticMatrix
from .rng import SplitMix64
from .tolerances import DEFAULT, Tolerances, resolve

__all__ = [
    "J2",
    "symplectic_form",
    "ResidualCheck",
    "is_symplectic",
    "is_orthogonal_symplectic",
    "conjugate_cm",
    "direct_sum",
    "random_symplectic",
]

J2 = np.array([[0.0, 1.0], [-1.0, 0.0]])


def symplectic_form(k: int) -> np.ndarray:
    """The 2k x 2k symplectic form: direct sum of k copies of
    ``[[0, 1], [-1, 0]]``.  Satisfies J^2 = -I and J^T = -J."""
    if k < 1:
        raise DomainError(f"mode count must be >= 1, got {k}")
    return np.kron(np.eye(k), J2)


@dataclass(frozen=True)
class ResidualCheck:
    """Verdict plus the residual that produced it."""

    ok: bool
    residual: float

    def __bool__(self) -> bool:
        return self.ok


def _even_square(s) -> np.ndarray:
    body = require_square(np.asarray(s, dtype=float))
    if body.shape[0] % 2 != 0:
        raise DimensionMismatch(f"matrix dimension {body.shape[0]} is odd")
    return body


def is_symplectic(s, tol: float | None = None) -> ResidualCheck:
    """Check ``S J S^T = J`` in the max norm."""
    body = _even_square(s)
    j = symplectic_form(body.shape[0] // 2)
    residual = max_norm(body @ j @ body.T - j)
    return ResidualCheck(residual <= resolve(tol, DEFAULT.symplectic), residual)


def is_orthogonal_symplectic(s, tol: float | None = None) -> ResidualCheck:
    """Check symplecticity and ``S^T S = I`` together; the reported residual
    is the larger of the two."""
    body = _even_square(s)
    limit = resolve(tol, DEFAULT.symplectic)
    sympl = is_symplectic(body, limit).residual
    ortho = max_norm(body.T @ body - np.eye(body.shape[0]))
    residual = max(sympl, ortho)
    return ResidualCheck(residual <= limit, residual)


def conjugate_cm(m: CovarianceMatrix, s: SymplecticMatrix) -> CovarianceMatrix:
    """The covariance matrix of the transformed state: ``S M S^T``,
    re-symmetrized to kill rounding drift."""
    if s.dim != m.dim:
        raise DimensionMismatch(f"S is {s.dim}-dimensional but M is {m.dim}-dimensional")
    x = s.body @ m.body @ s.body.T
    return CovarianceMatrix((x + x.T) / 2.0)


def direct_sum(s_a: SymplecticMatrix, s_b: SymplecticMatrix) -> SymplecticMatrix:
    """Block-diagonal symplectic acting as `s_a` on the first block of modes
    and `s_b` on the rest (modes concatenated, still interleaved)."""
    da, db = s_a.dim, s_b.dim
    out = np.zeros((da + db, da + db))
    out[:da, :da] = s_a.body
    out[da:, da:] = s_b.body
    return SymplecticMatrix(out)


def _sinc(theta: np.ndarray) -> np.ndarray:
    # sin(t)/t with the removable singularity filled by its series
    small = np.abs(theta) < 1e-6
    safe = np.where(small, 1.0, theta)
    return np.where(small, 1.0 - theta * theta / 6.0, np.sin(safe) / safe)


def _random_orthogonal_symplectic(gen: SplitMix64, k: int, tolerances: Tolerances) -> np.ndarray:
    """Exponential of a random antisymmetric generator commuting with J.

    Draw order (fixed for cross-implementation reproducibility): the strict
    upper triangle of the antisymmetric part A row-major, then the upper
    triangle including the diagonal of the symmetric part B row-major, all
    standard normal.  The generator is ``X = A (x) I_2 + B (x) J_2`` and the
    rotation is ``exp(X) = cos(T) + X sinc(T)`` with ``T = sqrt(X^T X)``,
    evaluated through the symmetric eigendecomposition of ``X^T X``.
    """
    a = np.zeros((k, k))
    for i in range(k):
        for j in range(i + 1, k):
            a[i, j] = gen.normal()
            a[j, i] = -a[i, j]
    b = np.zeros((k, k))
    for i in range(k):
        for j in range(i, k):
            b[i, j] = gen.normal()
            b[j, i] = b[i, j]
    x = np.kron(a, np.eye(2)) + np.kron(b, J2)
    vals, vecs = sym_eigen(x.T @ x, tolerances)
    theta = np.sqrt(np.maximum(vals, 0.0))
    cos_part = (vecs * np.cos(theta)) @ vecs.T
    sinc_part = (vecs * _sinc(theta)) @ vecs.T
    return cos_part + x @ sinc_part


def random_symplectic(
    k: int,
    seed: int,
    r_max: float = 1.0,
    tolerances: Tolerances = DEFAULT,
) -> SymplecticMatrix:
    """Seeded random symplectic on k modes with squeezing up to `r_max`.

    Euler-style product ``R1 @ D @ R2``: two random orthogonal symplectics
    around a squeezer ``D = diag(e^{r_0}, e^{-r_0}, ..., e^{r_{k-1}},
    e^{-r_{k-1}})`` with each ``r_i`` uniform in ``[-r_max, r_max]``.  One
    splitmix64 stream seeded with `seed` feeds, in order: R1's generator,
    the k squeezing parameters, R2's generator (see :mod:`modewise.rng` for
    the exact algorithm).  Identical seeds give identical matrices.
    """
    if k < 1:
        raise DomainError(f"mode count must be >= 1, got {k}")
    if r_max < 0:
        raise DomainError(f"r_max must be >= 0, got {r_max}")
    gen = SplitMix64(seed)
    r1 = _random_orthogonal_symplectic(gen, k, tolerances)
    squeeze = np.empty(2 * k)
    for i in range(k):
        r = gen.uniform_in(-r_max, r_max)
        squeeze[2 * i] = math.exp(r)
        squeeze[2 * i + 1] = math.exp(-r)
    r2 = _random_orthogonal_symplectic(gen, k, tolerances)
    return SymplecticMatrix(r1 @ (squeeze[:, None] * r2))

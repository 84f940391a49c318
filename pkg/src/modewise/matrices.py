"""Phase-space matrix containers.

Coordinate convention (used everywhere, never reordered in public data):
interleaved mode ordering, i.e. coordinate ``2*i`` is the position q of mode
``i`` and coordinate ``2*i + 1`` is its momentum p.  Under this ordering the
symplectic form is the block-diagonal direct sum of 2x2 blocks
``[[0, 1], [-1, 0]]``.

Both containers are immutable: the wrapped array is copied on construction
and marked read-only, so instances are safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .densecore import as_matrix, max_norm, require_square
from .errors import DimensionMismatch
from .tolerances import DEFAULT

__all__ = ["CovarianceMatrix", "SymplecticMatrix", "interleaved_coords"]


def interleaved_coords(mode_indices) -> np.ndarray:
    """Coordinate indices (q_i, p_i) for the given mode indices, in order."""
    modes = np.asarray(list(mode_indices), dtype=int)
    coords = np.empty(2 * modes.size, dtype=int)
    coords[0::2] = 2 * modes
    coords[1::2] = 2 * modes + 1
    return coords


def _frozen_square_even(a, what: str) -> tuple[np.ndarray, int]:
    body = require_square(a)
    if body.shape[0] % 2 != 0:
        raise DimensionMismatch(f"{what} must have even dimension, got {body.shape[0]}")
    body = body.copy()
    body.flags.writeable = False
    return body, body.shape[0] // 2


@dataclass(frozen=True)
class CovarianceMatrix:
    """Real symmetric 2k x 2k matrix of second moments, interleaved ordering.

    Construction validates shape, finiteness and symmetry (within the
    relative `symmetry` tolerance) and stores the exactly symmetrized body.
    Physicality (all symplectic eigenvalues >= 1/2) is a property of the
    state, not of the container; test it with ``williamson.check_physical``.
    """

    body: np.ndarray
    modes: int = field(init=False)

    def __post_init__(self):
        body, modes = _frozen_square_even(self.body, "covariance matrix")
        asym = max_norm(body - body.T)
        limit = DEFAULT.symmetry * max(1.0, max_norm(body))
        if asym > limit:
            raise DimensionMismatch(
                f"covariance matrix asymmetry {asym:.3e} exceeds {limit:.3e}; "
                "symmetrize explicitly if this is intended"
            )
        sym = (body + body.T) / 2.0
        sym.flags.writeable = False
        object.__setattr__(self, "body", sym)
        object.__setattr__(self, "modes", modes)

    @property
    def dim(self) -> int:
        return 2 * self.modes

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.body, dtype=dtype)


@dataclass(frozen=True)
class SymplecticMatrix:
    """A 2k x 2k real matrix expected to satisfy S J S^T = J.

    Only shape and finiteness are enforced here; the symplectic residual is
    checked where it matters (``symplectic.is_symplectic``).
    """

    body: np.ndarray
    modes: int = field(init=False)

    def __post_init__(self):
        body, modes = _frozen_square_even(as_matrix(self.body), "symplectic matrix")
        object.__setattr__(self, "body", body)
        object.__setattr__(self, "modes", modes)

    @property
    def dim(self) -> int:
        return 2 * self.modes

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.body, dtype=dtype)

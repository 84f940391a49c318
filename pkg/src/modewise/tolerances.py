"""Central record of numerical tolerances.

Every public operation resolves its default threshold from one
:class:`Tolerances` instance, so a caller can tighten or loosen the whole
stack uniformly by passing a modified record.  Unless stated otherwise a
tolerance is relative to the max-norm of the operation's input.
"""

from __future__ import annotations

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Tolerances:
    # matrix construction / validation
    symmetry: float = 1e-10          # relative asymmetry accepted when building a CM
    # dense kernels
    jacobi_offdiag: float = 1e-14    # convergence: off-diagonal Frobenius mass vs ||A||_F
    jacobi_max_sweeps: int = 100
    orthogonality: float = 1e-10     # ||V^T V - 1||_max for eigenvector matrices
    # symplectic layer
    symplectic: float = 1e-9         # ||S J S^T - J||_max for symplecticity verdicts
    # spectra and decompositions
    eigen_pairing: float = 1e-6      # relative gap for matching doubled eigenvalues
    degeneracy: float = 1e-6         # clustering threshold: gap <= max(deg, deg*lambda)
    isotropy: float = 1e-8           # ||-(JM)^2 - lam0^2 I||_max vs max(1, lam0^2)
    physicality: float = 1e-9        # slack below 1/2 tolerated by check_physical
    purity: float = 1e-8             # |lambda - 1/2| accepted as pure
    decomposition: float = 1e-8      # reconstruction / cross-block residuals (relative)
    cross_block_slack: float = 10.0  # zero-with-warning band, in units of `decomposition`
    consistency: float = 1e-8        # dual-route agreement (entropy sums)
    ppt_margin: float = 1e-9         # band around the PPT boundary flagged "marginal"
    asymmetry: float = 1e-9          # CMX parser: absorbable relative asymmetry

    def with_(self, **kwargs) -> "Tolerances":
        """Return a copy with the given fields replaced."""
        return replace(self, **kwargs)


DEFAULT = Tolerances()


def resolve(tol: float | None, default: float) -> float:
    """Pick the caller's override, or the record default."""
    return default if tol is None else float(tol)

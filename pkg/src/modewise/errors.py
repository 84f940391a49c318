"""Exception hierarchy.

Everything the library raises on purpose derives from :class:`ModewiseError`,
so callers (and the CLI) can distinguish domain failures from bugs.
"""


class ModewiseError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(ModewiseError):
    """Matrix shapes are incompatible with the requested operation."""


class IndexOutOfRange(ModewiseError):
    """A mode index does not exist in the target covariance matrix."""


class DomainError(ModewiseError):
    """An argument lies outside the mathematical domain of the operation."""


class NotPositiveDefinite(ModewiseError):
    """A pivot <= 0 was met while factoring; the matrix is not strictly SPD."""


class NoConvergence(ModewiseError):
    """The eigensolver hit its sweep cap without reaching the off-diagonal
    threshold; the input is pathological for a cyclic Jacobi iteration."""


class UnpairedEigenvalue(ModewiseError):
    """The eigenvalues of -(JM)^2 failed to match up into equal pairs,
    which signals a non-symmetric or otherwise corrupted covariance matrix."""


class NotPhysical(ModewiseError):
    """The covariance matrix violates the uncertainty bound (some symplectic
    eigenvalue is below 1/2)."""


class NotPure(ModewiseError):
    """The state is not pure; the requested quantity is defined for pure
    states only."""


class NotIsotropic(ModewiseError):
    """-(JM)^2 is not proportional to the identity within tolerance, so the
    pairwise decomposition does not apply."""


class DegeneracyMismatch(ModewiseError):
    """Local eigenvalue multiplicities (or required vanishing cross blocks)
    are inconsistent beyond tolerance; usually an eigenvalue-clustering
    breakdown."""


class CouplingResidual(ModewiseError):
    """An extracted coupling rotation failed the orthogonal-symplectic test;
    usually a tolerance misconfiguration."""


class ConsistencyError(ModewiseError):
    """Two independent routes to the same quantity disagreed beyond
    tolerance."""


class CmxError(ModewiseError):
    """Base class for matrix-document (CMX) format errors."""


class ParseError(CmxError):
    """Malformed CMX text. Carries the 1-based line and column."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class BadHeader(CmxError):
    """The CMX header is missing or declares something unsupported."""


class AsymmetryError(CmxError):
    """The parsed matrix is asymmetric beyond the absorbable tolerance."""

"""Dense complex linear algebra helpers shared by the rest of the package.

Everything here operates on plain numpy arrays.  Structural wrappers
(density matrices, observables, bases) live in :mod:`tribell.states`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

HERMITICITY_TOL = 1e-10
PSD_FLOOR = -1e-12
# Relative spectral cutoff used by psd_sqrt: eigenvalues below
# 64 * eps * lambda_max are rounding debris of exact zeros, and taking
# sqrt would amplify them from ~1e-16 to ~1e-8.
SPECTRAL_CUTOFF_FACTOR = 64.0


class NotHermitianError(ValueError):
    """Raised when a matrix expected to be Hermitian is not."""


class NotPSDError(ValueError):
    """Raised when a matrix expected to be positive semidefinite is not."""


class DimensionMismatchError(ValueError):
    """Raised when operand shapes are incompatible."""


class NoConvergenceError(RuntimeError):
    """Raised when an iterative eigensolve fails to converge."""


def as_complex_matrix(a) -> np.ndarray:
    """Coerce input to a finite 2-D complex array."""
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2:
        raise DimensionMismatchError(f"expected a 2-D matrix, got ndim={m.ndim}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix contains non-finite entries")
    return m


def _require_square(m: np.ndarray) -> np.ndarray:
    if m.shape[0] != m.shape[1]:
        raise DimensionMismatchError(f"expected a square matrix, got shape {m.shape}")
    return m


def kron(a, b) -> np.ndarray:
    """Kronecker product of two matrices."""
    return np.kron(as_complex_matrix(a), as_complex_matrix(b))


def adjoint(a) -> np.ndarray:
    """Conjugate transpose."""
    return as_complex_matrix(a).conj().T


def commutator(a, b) -> np.ndarray:
    """Matrix commutator a @ b - b @ a."""
    ma = _require_square(as_complex_matrix(a))
    mb = _require_square(as_complex_matrix(b))
    if ma.shape != mb.shape:
        raise DimensionMismatchError(f"shapes differ: {ma.shape} vs {mb.shape}")
    return ma @ mb - mb @ ma


def hermiticity_defect(a) -> float:
    """Largest entrywise deviation of a from its own adjoint."""
    m = _require_square(as_complex_matrix(a))
    return float(np.max(np.abs(m - m.conj().T))) if m.size else 0.0


@dataclass(frozen=True)
class HermEigen:
    """Spectral decomposition of a Hermitian matrix.

    eigenvalues are ascending; eigenvectors[:, k] is the unit eigenvector
    for eigenvalues[k], with its global phase fixed so that the component
    of largest modulus (first such index on ties) is real and positive.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def _fix_phases(vectors: np.ndarray) -> np.ndarray:
    """Rotate each column so its largest-modulus component is real positive."""
    out = vectors.copy()
    for k in range(out.shape[1]):
        col = out[:, k]
        idx = int(np.argmax(np.abs(col)))
        pivot = col[idx]
        if np.abs(pivot) > 0.0:
            out[:, k] = col * (np.conj(pivot) / np.abs(pivot))
    return out


def herm_eig(a, tol: float = HERMITICITY_TOL) -> HermEigen:
    """Eigendecomposition of a Hermitian matrix with a fixed phase convention.

    Raises NotHermitianError if the hermiticity defect exceeds tol, and
    NoConvergenceError if the underlying solver fails.
    """
    m = _require_square(as_complex_matrix(a))
    defect = float(np.max(np.abs(m - m.conj().T))) if m.size else 0.0
    if defect > tol:
        raise NotHermitianError(f"hermiticity defect {defect:.3e} exceeds tol {tol:.3e}")
    sym = 0.5 * (m + m.conj().T)
    try:
        values, vectors = np.linalg.eigh(sym)
    except np.linalg.LinAlgError as exc:
        raise NoConvergenceError(f"eigensolve did not converge: {exc}") from exc
    return HermEigen(eigenvalues=values, eigenvectors=_fix_phases(vectors))


def psd_sqrt(a) -> np.ndarray:
    """Principal square root of a positive semidefinite Hermitian matrix.

    Eigenvalues in [PSD_FLOOR, 0) are treated as exact zeros, as are
    nonnegative eigenvalues below the relative spectral cutoff.  Anything
    below PSD_FLOOR raises NotPSDError.
    """
    eig = herm_eig(a)
    values = eig.eigenvalues
    if values.size and float(values.min()) < PSD_FLOOR:
        raise NotPSDError(f"minimum eigenvalue {float(values.min()):.3e} is below {PSD_FLOOR:.1e}")
    top = float(values.max()) if values.size else 0.0
    cutoff = SPECTRAL_CUTOFF_FACTOR * np.finfo(float).eps * max(top, 0.0)
    clean = np.where(values < cutoff, 0.0, values)
    root = (eig.eigenvectors * np.sqrt(clean)) @ eig.eigenvectors.conj().T
    return 0.5 * (root + root.conj().T)

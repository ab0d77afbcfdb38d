"""Basis-dependent coherence quantifiers and skew information.

Entropies are in bits (log base 2).  Basis arguments accept a
ProductBasis, a sequence of orthonormal Kets, or a unitary ndarray whose
columns are the basis kets.
"""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np

from .linalg import (
    DimensionMismatchError,
    HERMITICITY_TOL,
    NotHermitianError,
    as_complex_matrix,
    hermiticity_defect,
    psd_sqrt,
)
from .states import DensityMatrix, Ket, ProductBasis

ENTROPY_FLOOR = 1e-14
UNITARITY_TOL = 1e-10

BasisLike = ProductBasis | Sequence[Ket] | np.ndarray


def basis_unitary(basis: BasisLike, dim: int) -> np.ndarray:
    """Coerce any accepted basis form into a dim x dim unitary of columns."""
    if isinstance(basis, ProductBasis):
        u = basis.unitary()
    elif isinstance(basis, np.ndarray):
        u = as_complex_matrix(basis)
    else:
        kets = list(basis)
        if not kets or not all(isinstance(k, Ket) for k in kets):
            raise TypeError("basis must be a ProductBasis, a sequence of Kets, or an ndarray")
        u = np.column_stack([k.amplitudes for k in kets])
    if u.shape != (dim, dim):
        raise DimensionMismatchError(f"basis shape {u.shape} does not match state dimension {dim}")
    gram_defect = float(np.max(np.abs(u.conj().T @ u - np.eye(dim))))
    if gram_defect > UNITARITY_TOL:
        raise ValueError(f"basis columns deviate from orthonormality by {gram_defect:.3e}")
    return u


def l1_coherence(rho: DensityMatrix, basis: BasisLike) -> float:
    """Sum of moduli of all matrix entries in the given basis, minus one.

    Equals the usual sum over off-diagonal moduli because the diagonal
    moduli of a density matrix add up to one.
    """
    u = basis_unitary(basis, rho.dim)
    rep = u.conj().T @ rho.matrix @ u
    return float(np.sum(np.abs(rep)) - 1.0)


def _prob_entropy(p: np.ndarray) -> float:
    p = p[p > ENTROPY_FLOOR]
    return float(-np.sum(p * np.log2(p))) if p.size else 0.0


def von_neumann_entropy(rho: DensityMatrix) -> float:
    """Spectral entropy -sum lam log2 lam with tiny eigenvalues dropped."""
    return _prob_entropy(np.linalg.eigvalsh(rho.matrix))


def dephase(rho: DensityMatrix, basis: BasisLike) -> DensityMatrix:
    """Projection onto the diagonal of the given basis."""
    u = basis_unitary(basis, rho.dim)
    rep = u.conj().T @ rho.matrix @ u
    diag = np.diag(np.diag(rep).real.clip(min=0.0).astype(complex))
    out = u @ diag @ u.conj().T
    return DensityMatrix(out / np.trace(out).real)


def relative_entropy_coherence(rho: DensityMatrix, basis: BasisLike) -> float:
    """Entropy of the dephased state minus entropy of the state itself."""
    value = von_neumann_entropy(dephase(rho, basis)) - von_neumann_entropy(rho)
    return max(0.0, value)


def _check_observable_matrix(rho: DensityMatrix, x) -> np.ndarray:
    m = as_complex_matrix(x)
    if m.shape != (rho.dim, rho.dim):
        raise DimensionMismatchError(f"observable shape {m.shape} does not match state dimension {rho.dim}")
    defect = hermiticity_defect(m)
    if defect > HERMITICITY_TOL:
        raise NotHermitianError(f"observable hermiticity defect {defect:.3e}")
    return m


def _skew_from_root(root: np.ndarray, m: np.ndarray) -> float:
    c = root @ m - m @ root
    return max(0.0, float(-0.5 * np.trace(c @ c).real))


def skew_information(rho: DensityMatrix, x) -> float:
    """Wigner-Yanase skew information -1/2 Tr [sqrt(rho), X]^2."""
    m = _check_observable_matrix(rho, x)
    return _skew_from_root(psd_sqrt(rho.matrix), m)


def variance(rho: DensityMatrix, x) -> float:
    """Ordinary variance Tr rho X^2 - (Tr rho X)^2."""
    m = _check_observable_matrix(rho, x)
    mean = float(np.trace(rho.matrix @ m).real)
    second = float(np.trace(rho.matrix @ m @ m).real)
    return max(0.0, second - mean * mean)

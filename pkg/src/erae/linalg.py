"""Dense complex-matrix kernels: eigendecomposition, PSD square root,
partial trace and Kronecker products.

Everything here is a thin, contract-checking layer over numpy's LAPACK
bindings; matrices are desk-scale (at most a few hundred rows), dense and
Hermitian. All functions are pure and safe to call concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .config import TOLS
from .exceptions import DimensionMismatch, NotHermitian, NotPSD, NotSquare


def as_complex_matrix(m: np.ndarray) -> np.ndarray:
    """Validate and return `m` as a 2-D complex128 array."""
    a = np.asarray(m, dtype=np.complex128)
    if a.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a.view(np.float64))):
        raise ValueError("matrix contains NaN or Inf entries")
    return a


def _require_square(a: np.ndarray) -> None:
    if a.shape[0] != a.shape[1]:
        raise NotSquare(f"expected a square matrix, got shape {a.shape}")


def _require_hermitian(a: np.ndarray, tol: float) -> None:
    defect = np.max(np.abs(a - a.conj().T)) if a.size else 0.0
    if defect > tol:
        raise NotHermitian(f"Hermiticity defect {defect:.3e} exceeds {tol:.1e}")


@dataclass
class DensityMatrix:
    """A Hermitian, PSD, unit-trace matrix with declared bipartite split.

    Parameters
    ----------
    matrix : array_like
        Square complex matrix of size ``dim_a * dim_b``.
    dim_a, dim_b : int
        Dimensions of the two subsystems.
    """

    matrix: np.ndarray
    dim_a: int
    dim_b: int

    def __post_init__(self):
        m = as_complex_matrix(self.matrix)
        _require_square(m)
        if self.dim_a < 1 or self.dim_b < 1:
            raise DimensionMismatch("subsystem dimensions must be positive")
        if self.dim_a * self.dim_b != m.shape[0]:
            raise DimensionMismatch(
                f"dims {self.dim_a}x{self.dim_b} do not match matrix size {m.shape[0]}")
        _require_hermitian(m, TOLS.hermiticity)
        tr = np.trace(m).real
        if abs(tr - 1.0) > TOLS.trace:
            raise ValueError(f"trace {tr!r} is not 1 within {TOLS.trace:.1e}")
        low = np.linalg.eigvalsh(m)[0]
        if low < -TOLS.psd_clip:
            raise NotPSD(f"eigenvalue {low:.3e} below -{TOLS.psd_clip:.1e}")
        self.matrix = m

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


@dataclass
class HermitianSpectrum:
    """Eigendecomposition of a Hermitian matrix, eigenvalues descending."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray  # orthonormal columns, aligned with eigenvalues

    def reconstruct(self) -> np.ndarray:
        q = self.eigenvectors
        return (q * self.eigenvalues) @ q.conj().T


def hermitian_eig(m: np.ndarray) -> HermitianSpectrum:
    """Eigendecompose a Hermitian matrix.

    Raises
    ------
    NotSquare, NotHermitian
    """
    a = as_complex_matrix(m)
    _require_square(a)
    _require_hermitian(a, TOLS.hermiticity_eig)
    w, q = np.linalg.eigh(a)
    return HermitianSpectrum(eigenvalues=w[::-1].copy(), eigenvectors=q[:, ::-1].copy())


def psd_sqrt(m: np.ndarray) -> np.ndarray:
    """Hermitian PSD square root.

    Eigenvalues in ``[-psd_clip, 0)`` are treated as roundoff and clamped
    to zero; anything below ``-psd_reject`` raises ``NotPSD``.
    """
    spec = hermitian_eig(m)
    w = spec.eigenvalues
    if w[-1] < -TOLS.psd_reject:
        raise NotPSD(f"eigenvalue {w[-1]:.3e} below -{TOLS.psd_reject:.1e}")
    w = np.maximum(w, 0.0)
    q = spec.eigenvectors
    r = (q * np.sqrt(w)) @ q.conj().T
    return (r + r.conj().T) / 2.0


def partial_trace(rho: DensityMatrix, keep: str) -> np.ndarray:
    """Trace out one subsystem of a bipartite density matrix.

    Parameters
    ----------
    rho : DensityMatrix
    keep : {'A', 'B'}
        Which subsystem the result describes.
    """
    if keep not in ("A", "B"):
        raise ValueError(f"keep must be 'A' or 'B', got {keep!r}")
    da, db = rho.dim_a, rho.dim_b
    t = rho.matrix.reshape(da, db, da, db)
    if keep == "A":
        return np.einsum("ajbj->ab", t)
    return np.einsum("iajb->ab", t)


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product of two matrices."""
    return np.kron(as_complex_matrix(a), as_complex_matrix(b))


def random_density_matrix(n: int, dim_a: int, dim_b: int,
                          rng: np.random.Generator,
                          rank: int | None = None) -> DensityMatrix:
    """Draw a random mixed state from the Ginibre ensemble (optionally low rank)."""
    k = rank or n
    g = rng.standard_normal((n, k)) + 1j * rng.standard_normal((n, k))
    m = g @ g.conj().T
    m /= np.trace(m).real
    return DensityMatrix((m + m.conj().T) / 2.0, dim_a, dim_b)

"""Concurrence of two-qubit states and the closed-form entanglement
Renyi entropy valid above the critical order."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .config import entropy_scale
from .exceptions import (AlphaBelowCritical, DimensionMismatch, NotNormalized,
                         NumericalFailure)
from .linalg import DensityMatrix, as_complex_matrix, psd_sqrt
from .pure import (GENERIC, ZERO, AlphaParam, alpha_critical, as_alpha,
                   renyi_of_concurrence)

_SY = np.array([[0.0, -1.0j], [1.0j, 0.0]])
_SYSY = np.kron(_SY, _SY)  # real matrix: antidiagonal (-1, 1, 1, -1)


def _require_two_qubit(state: DensityMatrix) -> None:
    if (state.dim_a, state.dim_b) != (2, 2):
        raise DimensionMismatch(
            f"expected a 2x2 bipartition, got {state.dim_a}x{state.dim_b}")


def spin_flip(state: DensityMatrix) -> np.ndarray:
    """Spin-flipped matrix: conjugate in the computational basis, then
    rotate both qubits by sigma_y. Preserves Hermiticity, positivity and trace."""
    _require_two_qubit(state)
    return _SYSY @ state.matrix.conj() @ _SYSY


def concurrence_pure(psi: np.ndarray) -> float:
    """Concurrence of a two-qubit pure state: overlap with its spin flip.

    Equals ``2 sqrt(mu1 mu2)`` in terms of the Schmidt weights.
    """
    v = np.asarray(psi, dtype=np.complex128).ravel()
    if v.size != 4:
        raise DimensionMismatch(f"expected a 4-vector, got length {v.size}")
    norm = np.linalg.norm(v)
    if abs(norm - 1.0) > 1e-10:
        raise NotNormalized(f"state norm {norm!r} is not 1")
    return float(2.0 * abs(v[1] * v[2] - v[0] * v[3]))


@dataclass(frozen=True)
class ConcurrenceResult:
    """Concurrence together with the four sorted singular values it came from."""

    concurrence: float
    lambdas: np.ndarray  # descending, nonnegative


def concurrence_mixed(state: DensityMatrix) -> ConcurrenceResult:
    """Concurrence of an arbitrary two-qubit mixed state.

    The four characteristic values are taken from the Hermitian product
    ``sqrt(rho) . flip(rho) . sqrt(rho)``, which shares its spectrum with
    ``flip(rho) . rho`` but keeps the eigenproblem Hermitian.
    """
    _require_two_qubit(state)
    r = psd_sqrt(state.matrix)
    h = r @ spin_flip(state) @ r
    w = np.linalg.eigvalsh((h + h.conj().T) / 2.0)
    if w[0] < -1e-8:
        raise NumericalFailure(f"characteristic value {w[0]:.3e} below -1e-8")
    lam = np.sqrt(np.maximum(w, 0.0))[::-1]
    c = max(lam[0] - lam[1] - lam[2] - lam[3], 0.0)
    return ConcurrenceResult(concurrence=float(c), lambdas=lam.copy())


def renyi_entanglement_two_qubit(state: DensityMatrix,
                                 alpha: float | AlphaParam) -> float:
    """Entanglement Renyi entropy of a two-qubit mixed state, closed form.

    Valid for orders at or above :func:`erae.pure.alpha_critical` (the von
    Neumann limit included), where the measure depends on the state only
    through its concurrence. Below the critical order no closed form is
    claimed and ``AlphaBelowCritical`` is raised; use the roof oracle there.
    """
    a = as_alpha(alpha)
    below = a.mode == ZERO or (a.mode == GENERIC and a.value < alpha_critical() - 1e-12)
    if below:
        raise AlphaBelowCritical(
            f"closed form requires order >= {alpha_critical():.6f}, got {a.value!r}")
    c = concurrence_mixed(state).concurrence
    return renyi_of_concurrence(c, a)


def renyi_two_qubit_alpha2(state: DensityMatrix) -> float:
    """Order-2 closed form written directly in the concurrence:
    ``-log2(1 - C^2/2)``. Provided as an algebraic cross-check target."""
    c = concurrence_mixed(state).concurrence
    return -math.log2(1.0 - c * c / 2.0) * entropy_scale()

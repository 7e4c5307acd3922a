"""Werner and isotropic state families.

Constructors, the symmetry parameters that label each family, exact
twirling (projection onto the family), the pure-state entropy profiles
whose lower convex envelopes give the mixed-state measure, and the
isotropic entanglement-of-formation piecewise formula with its curvature
verification helpers.

The Werner parameter convention used throughout: ``F = -tr(swap . rho)``,
so Werner states are separable exactly for ``F <= 0``. Isotropic states
are labelled by the fidelity with the maximally entangled state and are
separable for ``F <= 1/d``.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass

import numpy as np

from .config import TOLS, entropy_scale
from .exceptions import DimensionMismatch, DomainError, InvalidSpec
from .hull import HullCurve, evaluate, lower_envelope
from .linalg import DensityMatrix
from .pure import (VON_NEUMANN, ZERO, AlphaParam, _of_concurrence_bits,
                   as_alpha)

LN2 = math.log(2.0)


@dataclass(frozen=True)
class WernerSpec:
    """Werner family member: two d-dimensional sides, parameter F in [-1, 1]."""

    d: int
    F: float

    def __post_init__(self):
        if int(self.d) != self.d or self.d < 2:
            raise InvalidSpec(f"dimension must be an integer >= 2, got {self.d!r}")
        if not (-1.0 <= self.F <= 1.0):
            raise InvalidSpec(f"Werner parameter {self.F!r} outside [-1, 1]")
        object.__setattr__(self, "d", int(self.d))
        object.__setattr__(self, "F", float(self.F))


@dataclass(frozen=True)
class IsotropicSpec:
    """Isotropic family member: fidelity F in [0, 1] with the maximally
    entangled state on two d-dimensional sides."""

    d: int
    F: float

    def __post_init__(self):
        if int(self.d) != self.d or self.d < 2:
            raise InvalidSpec(f"dimension must be an integer >= 2, got {self.d!r}")
        if not (0.0 <= self.F <= 1.0):
            raise InvalidSpec(f"isotropic fidelity {self.F!r} outside [0, 1]")
        object.__setattr__(self, "d", int(self.d))
        object.__setattr__(self, "F", float(self.F))


# Operators and constructors --------------------------------------------------

def swap_operator(d: int) -> np.ndarray:
    """Permutation operator exchanging the two d-dimensional sides."""
    f = np.zeros((d * d, d * d), dtype=np.complex128)
    for i in range(d):
        for j in range(d):
            f[i * d + j, j * d + i] = 1.0
    return f


def max_entangled_projector(d: int) -> np.ndarray:
    """Projector onto the canonical maximally entangled state."""
    psi = np.zeros(d * d, dtype=np.complex128)
    for i in range(d):
        psi[i * d + i] = 1.0 / math.sqrt(d)
    return np.outer(psi, psi.conj())


def werner_density(spec: WernerSpec) -> DensityMatrix:
    """Werner state: mixture of the normalized symmetric and antisymmetric
    projectors with weights (1-F)/2 and (1+F)/2."""
    d, F = spec.d, spec.F
    eye = np.eye(d * d, dtype=np.complex128)
    f = swap_operator(d)
    m = (1.0 - F) / 2.0 * (eye + f) / (d * d + d) \
        + (1.0 + F) / 2.0 * (eye - f) / (d * d - d)
    return DensityMatrix(m, d, d)


def isotropic_density(spec: IsotropicSpec) -> DensityMatrix:
    """Isotropic state: maximally entangled state with weight F plus the
    normalized complement of its projector."""
    d, F = spec.d, spec.F
    p = max_entangled_projector(d)
    eye = np.eye(d * d, dtype=np.complex128)
    m = F * p + (1.0 - F) / (d * d - 1.0) * (eye - p)
    return DensityMatrix(m, d, d)


def _require_equal_sides(rho: DensityMatrix) -> int:
    if rho.dim_a != rho.dim_b:
        raise DimensionMismatch(
            f"family parameter needs equal sides, got {rho.dim_a}x{rho.dim_b}")
    return rho.dim_a


def werner_parameter(rho: DensityMatrix) -> float:
    """Werner symmetry parameter of an arbitrary state: ``-tr(swap . rho)``."""
    d = _require_equal_sides(rho)
    val = -np.trace(swap_operator(d) @ rho.matrix).real
    return float(min(max(val, -1.0), 1.0))


def isotropic_fidelity(rho: DensityMatrix) -> float:
    """Fidelity of an arbitrary state with the maximally entangled state."""
    d = _require_equal_sides(rho)
    val = np.trace(max_entangled_projector(d) @ rho.matrix).real
    return float(min(max(val, 0.0), 1.0))


def twirl_werner(rho: DensityMatrix) -> WernerSpec:
    """Project a state onto the Werner family.

    Group averaging over identical local unitaries preserves the swap
    expectation value, so the projection is exact: no integration needed.
    Idempotent on family members.
    """
    return WernerSpec(d=_require_equal_sides(rho), F=werner_parameter(rho))


def twirl_isotropic(rho: DensityMatrix) -> IsotropicSpec:
    """Project a state onto the isotropic family (exact, fidelity-preserving)."""
    return IsotropicSpec(d=_require_equal_sides(rho), F=isotropic_fidelity(rho))


# Pure-state entropy profiles --------------------------------------------------

def werner_entropy_curve(F: float, alpha: float | AlphaParam) -> float:
    """Minimal pure-state Renyi entropy at fixed Werner parameter.

    Zero on [-1, 0]; for F in (0, 1] it coincides with the two-qubit
    pure-state entropy at concurrence F, independently of the dimension.
    """
    if not (-1.0 - 1e-12 <= F <= 1.0 + 1e-12):
        raise DomainError(f"Werner parameter {F!r} outside [-1, 1]")
    if F <= 0.0:
        return 0.0
    return renyi_of_concurrence(min(F, 1.0), alpha)


def iso_top_schmidt(F: float, d: int) -> float:
    """Largest Schmidt weight of the entropy-minimizing pure state at
    fidelity F: ``(sqrt(F) + sqrt((d-1)(1-F)))^2 / d``, in [1/d, 1]."""
    if int(d) != d or d < 2:
        raise DomainError(f"dimension must be an integer >= 2, got {d!r}")
    if not (0.0 - 1e-12 <= F <= 1.0 + 1e-12):
        raise DomainError(f"fidelity {F!r} outside [0, 1]")
    F = min(max(F, 0.0), 1.0)
    g = (math.sqrt(F) + math.sqrt((d - 1.0) * (1.0 - F))) ** 2 / d
    return min(max(g, 0.0), 1.0)


def _iso_profile_bits(F: float, a: AlphaParam, d: int) -> float:
    """Entropy profile of the isotropic family in bits (no base scaling)."""
    if abs(F - 1.0 / d) <= TOLS.breakpoint_snap:
        F = 1.0 / d
    if F <= 1.0 / d:
        return 0.0
    g = iso_top_schmidt(F, d)
    if a.mode == ZERO:
        return math.log2(d)
    if a.mode == VON_NEUMANN:
        return _iso_eof_curve_bits(F, d)
    av = a.value
    rest = (d - 1.0) ** (1.0 - av) * (1.0 - g) ** av
    return math.log2(g ** av + rest) / (1.0 - av)


def iso_entropy_curve(F: float, alpha: float | AlphaParam, d: int) -> float:
    """Minimal pure-state Renyi entropy at fixed fidelity with the maximally
    entangled state. Zero for F <= 1/d; above, the closed form through the
    top Schmidt weight. The von Neumann limit reduces to :func:`iso_eof_curve`."""
    if not (0.0 - 1e-12 <= F <= 1.0 + 1e-12):
        raise DomainError(f"fidelity {F!r} outside [0, 1]")
    return _iso_profile_bits(min(max(F, 0.0), 1.0), as_alpha(alpha), int(d)) * entropy_scale()


def _iso_eof_curve_bits(F: float, d: int) -> float:
    g = iso_top_schmidt(F, d)
    h2 = 0.0
    for v in (g, 1.0 - g):
        if v > 0.0:
            h2 -= v * math.log2(v)
    return h2 + (1.0 - g) * math.log2(d - 1.0) if d > 2 else h2


def iso_eof_curve(F: float, d: int) -> float:
    """Von Neumann limit of the isotropic entropy profile:
    binary entropy of the top Schmidt weight plus the residual-level term."""
    if int(d) != d or d < 2:
        raise DomainError(f"dimension must be an integer >= 2, got {d!r}")
    if not (0.0 - 1e-12 <= F <= 1.0 + 1e-12):
        raise DomainError(f"fidelity {F!r} outside [0, 1]")
    return _iso_eof_curve_bits(min(max(F, 0.0), 1.0), int(d)) * entropy_scale()


# Hull cache and the mixed-state measures --------------------------------------

DEFAULT_GRID = 4001
DEFAULT_REFINE_TOL = 1e-9

_hull_cache: dict[tuple, HullCurve] = {}
_hull_lock = threading.Lock()


def _cached_hull(family: str, a: AlphaParam, d: int) -> HullCurve:
    key = (family, round(a.value, 12), a.mode, d, DEFAULT_GRID)
    hull = _hull_cache.get(key)
    if hull is not None:
        return hull
    if family == "werner":
        def f(x):
            xv = np.atleast_1d(np.asarray(x, dtype=np.float64))
            out = np.array([_werner_curve_bits(v, a) for v in xv])
            return out if np.ndim(x) else out[0]
        hull = lower_envelope(f, (-1.0, 1.0), grid=DEFAULT_GRID,
                              refine_tol=DEFAULT_REFINE_TOL, breakpoints=(0.0,))
    else:
        def f(x):
            xv = np.atleast_1d(np.asarray(x, dtype=np.float64))
            out = np.array([_iso_profile_bits(v, a, d) for v in xv])
            return out if np.ndim(x) else out[0]
        hull = lower_envelope(f, (0.0, 1.0), grid=DEFAULT_GRID,
                              refine_tol=DEFAULT_REFINE_TOL, breakpoints=(1.0 / d,))
    with _hull_lock:
        _hull_cache[key] = hull
    return hull


def _werner_curve_bits(F: float, a: AlphaParam) -> float:
    if F <= 0.0:
        return 0.0
    if a.mode == ZERO:
        return 1.0
    # bits-valued profile regardless of the global base
    scale = entropy_scale()
    return werner_entropy_curve(F, a) / scale if scale != 1.0 else werner_entropy_curve(F, a)


def renyi_entanglement_werner(spec: WernerSpec, alpha: float | AlphaParam) -> float:
    """Entanglement Renyi entropy of a Werner state: the lower convex
    envelope of its pure-state entropy profile, evaluated at F.

    The result does not depend on d; separable members (F <= 0) return 0.
    """
    a = as_alpha(alpha)
    F = spec.F
    if abs(F) <= TOLS.breakpoint_snap:
        F = 0.0
    if F <= 0.0:
        return 0.0
    hull = _cached_hull("werner", a, spec.d)
    return evaluate(hull, F) * entropy_scale()


def renyi_entanglement_isotropic(spec: IsotropicSpec, alpha: float | AlphaParam) -> float:
    """Entanglement Renyi entropy of an isotropic state: the lower convex
    envelope of its entropy profile, evaluated at F. Zero for F <= 1/d."""
    a = as_alpha(alpha)
    F = spec.F
    if abs(F - 1.0 / spec.d) <= TOLS.breakpoint_snap:
        F = 1.0 / spec.d
    if F <= 1.0 / spec.d:
        return 0.0
    hull = _cached_hull("isotropic", a, spec.d)
    return evaluate(hull, F) * entropy_scale()


# Isotropic entanglement of formation ------------------------------------------

def iso_eof_tangent_point(d: int) -> float:
    """Fidelity where the linear branch of the isotropic EoF becomes
    tangent to the curved branch: ``4(d-1)/d^2`` (equals 1 when d=2)."""
    if int(d) != d or d < 2:
        raise InvalidSpec(f"dimension must be an integer >= 2, got {d!r}")
    f0 = 4.0 * (d - 1.0) / (d * d)
    if d > 2:
        resid = abs(iso_eof_tangent_residual(int(d)))
        if resid > 1e-8:
            raise ArithmeticError(f"tangency residual {resid:.3e} exceeds 1e-8")
    return f0


def _iso_eof_dF_bits(F: float, d: int) -> float:
    """Closed-form derivative of the EoF profile in F (chain rule through
    the top Schmidt weight)."""
    g = iso_top_schmidt(F, d)
    dg = -math.sqrt(g * (1.0 - g)) / math.sqrt(F * (1.0 - F))
    de_dg = math.log2((1.0 - g) / g) - math.log2(d - 1.0)
    return de_dg * dg


def iso_eof_tangent_residual(d: int) -> float:
    """Residual of the tangency condition at the breakpoint fidelity:
    ``log d - curve = (1 - F) * d(curve)/dF`` evaluated at 4(d-1)/d^2, in bits."""
    if int(d) != d or d < 3:
        raise InvalidSpec(f"tangency residual needs d >= 3, got {d!r}")
    f0 = 4.0 * (d - 1.0) / (d * d)
    return math.log2(d) - _iso_eof_curve_bits(f0, d) - (1.0 - f0) * _iso_eof_dF_bits(f0, d)


def eof_isotropic(spec: IsotropicSpec) -> float:
    """Entanglement of formation of an isotropic state, exact piecewise form:
    zero up to 1/d, the curved profile up to 4(d-1)/d^2, then the straight
    line through (1, log d)."""
    d, F = spec.d, spec.F
    if abs(F - 1.0 / d) <= TOLS.breakpoint_snap:
        F = 1.0 / d
    if F <= 1.0 / d:
        return 0.0
    if d == 2 or F <= 4.0 * (d - 1.0) / (d * d):
        return _iso_eof_curve_bits(F, d) * entropy_scale()
    val = d * math.log2(d - 1.0) / (d - 2.0) * (F - 1.0) + math.log2(d)
    return val * entropy_scale()


@dataclass(frozen=True)
class CurvatureWitness:
    """Evidence that the EoF profile is convex-then-concave in fidelity."""

    d: int
    x_plus: float             # zero of the curvature factor, in (0, 1)
    sign_change_count: int    # curvature sign changes on the scan grid
    sign_pattern_ok: bool     # exactly one change, positive then negative
    h_value: float            # log x - x/2 + 1/(2x) at x = sqrt(d-1); negative


def _iso_eof_d2F_sign_term(F: float, d: int) -> float:
    """Bracketed factor of the profile's second derivative in F; shares its
    sign (the prefactor is positive on (1/d, 1))."""
    g = iso_top_schmidt(F, d)
    return math.log(g * (d - 1.0) / (1.0 - g)) \
        - 2.0 * d * math.sqrt(F * (1.0 - F)) / math.sqrt(d - 1.0)


def iso_eof_convexity_witness(d: int, scan_step: float = 1e-3) -> CurvatureWitness:
    """Numerically certify the convex-then-concave shape of the isotropic
    EoF profile for d >= 3, alongside the closed-form zero of its slope factor."""
    if int(d) != d or d <= 2:
        raise InvalidSpec(f"curvature witness needs d >= 3, got {d!r}")
    d = int(d)
    sq = math.sqrt(d - 1.0)
    x_plus = (d - 2.0 * sq) / ((d - 2.0) * sq)
    h_value = math.log(sq) - sq / 2.0 + 1.0 / (2.0 * sq)

    lo, hi = 1.0 / d, 1.0
    grid = np.arange(lo + scan_step, hi, scan_step)
    signs = np.sign([_iso_eof_d2F_sign_term(float(F), d) for F in grid])
    nz = signs[signs != 0.0]
    changes = int(np.count_nonzero(np.diff(nz) != 0.0))
    pattern_ok = changes == 1 and nz[0] > 0.0 and nz[-1] < 0.0
    return CurvatureWitness(d=d, x_plus=x_plus, sign_change_count=changes,
                            sign_pattern_ok=pattern_ok, h_value=h_value)


def clear_hull_cache() -> None:
    """Drop all cached envelopes (mainly for tests)."""
    with _hull_lock:
        _hull_cache.clear()

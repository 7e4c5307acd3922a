"""Renyi entropy of bipartite pure states and its behaviour as a function
of two-qubit concurrence: values, derivatives, convexity regions and the
critical order above which the mixed-state measure is concurrence-determined.

Entropies are returned in bits by default; see :func:`erae.config.set_log_base`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .config import TOLS, entropy_scale
from .exceptions import DomainError, InvalidAlpha

LN2 = math.log(2.0)

# Renyi-order handling -------------------------------------------------------

GENERIC = "generic"
VON_NEUMANN = "von_neumann"
ZERO = "zero"


@dataclass(frozen=True)
class AlphaParam:
    """Renyi order with explicit handling of the alpha->0 and alpha->1 limits.

    ``mode`` is derived from ``value``: orders within 1e-12 of 1 evaluate the
    von Neumann limit, orders below 1e-12 the rank (alpha->0) limit.
    """

    value: float
    mode: str = ""

    def __post_init__(self):
        v = float(self.value)
        if not math.isfinite(v) or v < 0.0:
            raise InvalidAlpha(f"Renyi order must be finite and >= 0, got {self.value!r}")
        if abs(v - 1.0) < TOLS.alpha_limit:
            mode = VON_NEUMANN
        elif v < TOLS.alpha_limit:
            mode = ZERO
        else:
            mode = GENERIC
        if self.mode and self.mode != mode:
            raise InvalidAlpha(f"mode {self.mode!r} inconsistent with value {v!r}")
        object.__setattr__(self, "value", v)
        object.__setattr__(self, "mode", mode)

    @classmethod
    def zero_limit(cls) -> "AlphaParam":
        return cls(0.0)

    @classmethod
    def von_neumann(cls) -> "AlphaParam":
        return cls(1.0)


def as_alpha(alpha: float | AlphaParam) -> AlphaParam:
    if isinstance(alpha, AlphaParam):
        return alpha
    return AlphaParam(alpha)


# Schmidt spectra -------------------------------------------------------------

@dataclass
class SchmidtSpectrum:
    """Probability vector of squared Schmidt coefficients, stored descending."""

    mu: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.mu, dtype=np.float64).ravel()
        if v.size == 0:
            raise ValueError("empty Schmidt spectrum")
        if np.min(v) < -TOLS.rank_cutoff:
            raise ValueError(f"negative Schmidt weight {np.min(v):.3e}")
        s = v.sum()
        if abs(s - 1.0) > TOLS.trace:
            raise ValueError(f"Schmidt weights sum to {s!r}, not 1")
        self.mu = np.sort(np.maximum(v, 0.0))[::-1].copy()

    @classmethod
    def from_pure_state(cls, psi: np.ndarray, dim_a: int, dim_b: int) -> "SchmidtSpectrum":
        """Schmidt spectrum of a unit vector on a dim_a x dim_b bipartition."""
        v = np.asarray(psi, dtype=np.complex128).ravel()
        if v.size != dim_a * dim_b:
            raise ValueError(f"state of length {v.size} does not match {dim_a}x{dim_b}")
        s = np.linalg.svd(v.reshape(dim_a, dim_b), compute_uv=False)
        mu = s * s
        return cls(mu / mu.sum())


def renyi_entropy(spectrum: SchmidtSpectrum | np.ndarray,
                  alpha: float | AlphaParam) -> float:
    """Renyi entropy of a Schmidt spectrum.

    The alpha->1 limit evaluates the Shannon/von Neumann form, the alpha->0
    limit counts modes above the rank cutoff (1e-12).
    """
    mu = spectrum.mu if isinstance(spectrum, SchmidtSpectrum) else SchmidtSpectrum(spectrum).mu
    a = as_alpha(alpha)
    return _renyi_bits(mu, a) * entropy_scale()


def _renyi_bits(mu: np.ndarray, a: AlphaParam) -> float:
    if a.mode == ZERO:
        return math.log2(max(int(np.count_nonzero(mu > TOLS.rank_cutoff)), 1))
    if a.mode == VON_NEUMANN:
        nz = mu[mu > 0.0]
        return float(-(nz * np.log2(nz)).sum())
    av = a.value
    return math.log2(float((mu ** av).sum())) / (1.0 - av)


# Entropy as a function of two-qubit concurrence ------------------------------

def schmidt_pair(c: float) -> tuple[float, float]:
    """Schmidt weights (larger, smaller) of a two-qubit pure state with
    concurrence ``c``; the smaller one is computed cancellation-free."""
    s = math.sqrt(max((1.0 - c) * (1.0 + c), 0.0))
    lam_minus = c * c / (2.0 * (1.0 + s))
    return 1.0 - lam_minus, lam_minus


def _check_c(c: float, open_interval: bool = False) -> float:
    if not math.isfinite(c):
        raise DomainError(f"concurrence must be finite, got {c!r}")
    if -1e-12 <= c < 0.0:
        c = 0.0
    elif 1.0 < c <= 1.0 + 1e-12:
        c = 1.0
    if c < 0.0 or c > 1.0:
        raise DomainError(f"concurrence {c!r} outside [0, 1]")
    if open_interval and (c == 0.0 or c == 1.0):
        raise DomainError(f"derivative undefined at concurrence {c!r}")
    return c


def _of_concurrence_bits(c: float, a: AlphaParam) -> float:
    if a.mode == ZERO:
        return 0.0 if c == 0.0 else 1.0
    lp, lm = schmidt_pair(c)
    if a.mode == VON_NEUMANN:
        val = 0.0
        if lp > 0.0:
            val -= lp * math.log2(lp)
        if lm > 0.0:
            val -= lm * math.log2(lm)
        return val
    av = a.value
    return math.log2(lp ** av + lm ** av) / (1.0 - av)


def renyi_of_concurrence(c: float, alpha: float | AlphaParam) -> float:
    """Renyi entropy of a two-qubit pure state as a function of its concurrence.

    At the alpha->0 limit this is 0 at c=0 and one bit for any c>0 (rank
    counting; the discontinuity is intentional and not smoothed).
    """
    return _of_concurrence_bits(_check_c(c), as_alpha(alpha)) * entropy_scale()


def renyi_of_concurrence_d1(c: float, alpha: float | AlphaParam) -> float:
    """First derivative in the concurrence, on the open interval (0, 1).

    Non-negative for every order: the curve is monotonically increasing.
    """
    c = _check_c(c, open_interval=True)
    a = as_alpha(alpha)
    lp, lm = schmidt_pair(c)
    d1 = c / (2.0 * math.sqrt((1.0 - c) * (1.0 + c)))
    if a.mode == ZERO:
        return 0.0
    if a.mode == VON_NEUMANN:
        val = d1 * math.log2(lp / lm)
    else:
        av = a.value
        num = av * d1 * (lm ** (av - 1.0) - lp ** (av - 1.0))
        val = num / ((1.0 - av) * LN2 * (lp ** av + lm ** av))
    return val * entropy_scale()


def renyi_of_concurrence_d2(c: float, alpha: float | AlphaParam) -> float:
    """Second derivative in the concurrence, on the open interval (0, 1)."""
    c = _check_c(c, open_interval=True)
    a = as_alpha(alpha)
    if a.mode == ZERO:
        return 0.0
    lp, lm = schmidt_pair(c)
    one_minus_c2 = (1.0 - c) * (1.0 + c)
    d1 = c / (2.0 * math.sqrt(one_minus_c2))
    if a.mode == VON_NEUMANN:
        d1p = 1.0 / (2.0 * one_minus_c2 ** 1.5)
        val = (d1p * math.log(lp / lm) - d1 * d1 / (lp * lm)) / LN2
        return val * entropy_scale()
    av = a.value
    x = lm / lp
    g = 1.0 - x ** (2.0 * av - 1.0) - (2.0 * av - 1.0) * (1.0 - x) * x ** (av - 1.0)
    k = (1.0 - x ** (av - 1.0)) ** 2 + (1.0 + x) ** 2 / (2.0 * x * (1.0 - x)) * g
    val = -(av * lp ** (2.0 * av - 2.0) * d1 * d1) \
        / ((1.0 - av) * (lp ** av + lm ** av) ** 2) * k / LN2
    return val * entropy_scale()


# Convexity analysis ----------------------------------------------------------

CONCAVE = "concave_everywhere"
CONVEX = "convex_everywhere"
SIGN_CHANGE = "sign_change"


@dataclass(frozen=True)
class ConvexityReport:
    """Curvature classification of the entropy-vs-concurrence curve at fixed order."""

    alpha: float
    kind: str
    c0: float | None = None  # curvature zero crossing, present only for SIGN_CHANGE


def alpha_critical() -> float:
    """Order above which the curve is convex on the whole interval: (sqrt(7)-1)/2."""
    return (math.sqrt(7.0) - 1.0) / 2.0


def convexity_region(alpha: float) -> ConvexityReport:
    """Classify the curvature of the entropy-vs-concurrence curve for
    an order in (0, 1).

    Concave throughout for alpha <= 1/2, convex throughout above the
    critical order, otherwise convex-then-concave with the crossover
    located by bisection to 1e-10.
    """
    a = float(alpha)
    if not (0.0 < a < 1.0):
        raise InvalidAlpha(f"convexity analysis requires an order in (0, 1), got {alpha!r}")
    if a <= 0.5:
        return ConvexityReport(alpha=a, kind=CONCAVE)
    if a >= alpha_critical():
        return ConvexityReport(alpha=a, kind=CONVEX)
    lo, hi = 1e-6, 1.0 - 1e-6
    flo = renyi_of_concurrence_d2(lo, a)
    fhi = renyi_of_concurrence_d2(hi, a)
    if flo * fhi > 0.0:
        kind = CONCAVE if flo < 0.0 else CONVEX
        return ConvexityReport(alpha=a, kind=kind)
    while hi - lo > 1e-10:
        mid = 0.5 * (lo + hi)
        if renyi_of_concurrence_d2(mid, a) * flo > 0.0:
            lo = mid
        else:
            hi = mid
    return ConvexityReport(alpha=a, kind=SIGN_CHANGE, c0=0.5 * (lo + hi))

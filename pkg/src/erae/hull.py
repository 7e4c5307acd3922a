"""Lower convex envelope of a scalar function on a closed interval.

The envelope is built by sampling the function on a grid, taking the lower
hull of the samples with a monotone chain, and adaptively bisecting any
cell where the function dips below the interpolated hull by more than a
tolerance. Evaluators may be scalar or numpy-vectorized.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

import numpy as np

from .exceptions import NonFiniteFunction, OutOfDomain

MIN_CELL_WIDTH = 1e-7     # cells narrower than this are never bisected
BREAKPOINT_OFFSET = 1e-12  # sampling offset around declared discontinuities
DOMAIN_SLOP = 1e-12


@dataclass
class SampledCurve:
    """Strictly increasing abscissae with finite function values."""

    xs: np.ndarray
    ys: np.ndarray
    domain: tuple[float, float]

    def __post_init__(self):
        xs = np.asarray(self.xs, dtype=np.float64)
        ys = np.asarray(self.ys, dtype=np.float64)
        if xs.ndim != 1 or xs.shape != ys.shape or xs.size < 2:
            raise ValueError("need matching 1-D arrays of at least two samples")
        if np.any(np.diff(xs) <= 0.0):
            raise ValueError("sample abscissae must be strictly increasing")
        lo, hi = self.domain
        if xs[0] != lo or xs[-1] != hi:
            raise ValueError("samples must start and end at the domain endpoints")
        if not np.all(np.isfinite(ys)):
            raise NonFiniteFunction("curve contains non-finite values")
        self.xs, self.ys = xs, ys


@dataclass
class HullCurve:
    """Piecewise-linear lower convex envelope given by its support points."""

    support_xs: np.ndarray
    support_ys: np.ndarray
    domain: tuple[float, float]

    def __post_init__(self):
        xs = np.asarray(self.support_xs, dtype=np.float64)
        ys = np.asarray(self.support_ys, dtype=np.float64)
        if np.any(np.diff(xs) <= 0.0):
            raise ValueError("support abscissae must be strictly increasing")
        if xs.size >= 3:
            slopes = np.diff(ys) / np.diff(xs)
            if np.min(np.diff(slopes)) < -1e-12:
                raise ValueError("support points are not convex")
        self.support_xs, self.support_ys = xs, ys


def evaluate(hull: HullCurve, x: float) -> float:
    """Linear interpolation between the bracketing support points."""
    lo, hi = hull.domain
    if x < lo - DOMAIN_SLOP or x > hi + DOMAIN_SLOP:
        raise OutOfDomain(f"{x!r} outside [{lo}, {hi}]")
    x = min(max(x, hull.support_xs[0]), hull.support_xs[-1])
    return float(np.interp(x, hull.support_xs, hull.support_ys))


def _eval_many(f: Callable, xs: np.ndarray) -> np.ndarray:
    try:
        ys = np.asarray(f(xs), dtype=np.float64)
        if ys.shape != xs.shape:
            raise TypeError
    except (TypeError, ValueError):
        ys = np.array([float(f(x)) for x in xs])
    if not np.all(np.isfinite(ys)):
        raise NonFiniteFunction("function evaluator returned NaN or Inf")
    return ys


def _lower_hull_indices(xs: np.ndarray, ys: np.ndarray) -> list[int]:
    """Monotone-chain lower hull; collinear middle points are dropped."""
    keep: list[int] = []
    for i in range(xs.size):
        while len(keep) >= 2:
            a, b = keep[-2], keep[-1]
            cross = (xs[b] - xs[a]) * (ys[i] - ys[a]) - (ys[b] - ys[a]) * (xs[i] - xs[a])
            scale = abs(xs[i] - xs[a]) * (abs(ys[b]) + abs(ys[a]) + abs(ys[i]) + 1.0)
            if cross <= 1e-14 * scale:
                keep.pop()
            else:
                break
        keep.append(i)
    return keep


def lower_envelope(f: Callable[[float], float],
                   domain: tuple[float, float],
                   grid: int = 4001,
                   refine_tol: float = 1e-9,
                   breakpoints: Iterable[float] = ()) -> HullCurve:
    """Lower convex envelope of ``f`` on ``domain``.

    Parameters
    ----------
    f : callable
        Scalar or vectorized evaluator, finite on the domain.
    grid : int
        Initial number of uniform samples (>= 3).
    refine_tol : float
        A cell is bisected while the function at its midpoint lies below the
        interpolated hull by more than this, down to a 1e-7 width floor.
    breakpoints : iterable of float
        Known discontinuity locations; samples are pinned just left and
        right of each so jumps anchor the envelope exactly.
    """
    lo, hi = float(domain[0]), float(domain[1])
    if not (np.isfinite(lo) and np.isfinite(hi) and lo < hi):
        raise ValueError(f"bad domain {domain!r}")
    if grid < 3:
        raise ValueError("grid must be at least 3")
    xs = np.linspace(lo, hi, grid)
    extra = []
    for b in breakpoints:
        for x in (b - BREAKPOINT_OFFSET, b, b + BREAKPOINT_OFFSET):
            if lo < x < hi:
                extra.append(x)
    if extra:
        xs = np.unique(np.concatenate([xs, np.array(extra)]))
    ys = _eval_many(f, xs)

    for _ in range(60):  # refinement passes; each strictly shrinks cells
        idx = _lower_hull_indices(xs, ys)
        mids = 0.5 * (xs[:-1] + xs[1:])
        widths = np.diff(xs)
        cand = widths > MIN_CELL_WIDTH
        if not np.any(cand):
            break
        fm = _eval_many(f, mids[cand])
        hm = np.interp(mids[cand], xs[idx], ys[idx])
        bad = fm < hm - refine_tol
        if not np.any(bad):
            break
        xs = np.concatenate([xs, mids[cand][bad]])
        ys = np.concatenate([ys, fm[bad]])
        xs, uniq = np.unique(xs, return_index=True)
        ys = ys[uniq]
    idx = _lower_hull_indices(xs, ys)
    return HullCurve(support_xs=xs[idx].copy(), support_ys=ys[idx].copy(),
                     domain=(lo, hi))

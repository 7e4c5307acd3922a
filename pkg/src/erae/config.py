"""Central numerical tolerances and the global entropy log base."""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    """All thresholds used by the numerical routines, in one place."""

    hermiticity: float = 1e-10        # max |M - M^dag| for density matrices
    hermiticity_eig: float = 1e-8     # looser check at the eigensolver entry
    trace: float = 1e-10              # |tr(rho) - 1|
    psd_clip: float = 1e-10           # eigenvalues in [-psd_clip, 0) clamp to 0
    psd_reject: float = 1e-6          # eigenvalues below -psd_reject are an error
    orthonormality: float = 1e-10     # |Q^dag Q - I| for eigenvector matrices
    rank_cutoff: float = 1e-12        # probability above which a mode counts as occupied
    alpha_limit: float = 1e-12        # half-width of the alpha=0 and alpha=1 limit windows
    breakpoint_snap: float = 1e-14    # family parameters this close to a breakpoint snap to it
    weight_drop: float = 1e-14        # ensemble members below this weight are discarded
    reconstruction: float = 1e-8      # ensemble-vs-state reconstruction error


TOLS = Tolerances()

_LOG_BASE: float = 2.0


def set_log_base(base: float | str) -> None:
    """Set the global log base for all entropy outputs (2 or 'e').

    Every public function returning an entropy rescales by the same factor,
    so ratios of outputs are base-invariant.
    """
    global _LOG_BASE
    if base in ("e", "E"):
        _LOG_BASE = math.e
    else:
        b = float(base)
        if b <= 1.0:
            raise ValueError(f"log base must exceed 1, got {base!r}")
        _LOG_BASE = b


def get_log_base() -> float:
    return _LOG_BASE


def entropy_scale() -> float:
    """Factor converting internal bit-valued entropies to the active base."""
    return math.log(2.0) / math.log(_LOG_BASE)

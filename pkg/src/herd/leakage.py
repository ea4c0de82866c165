"""Below-cutoff leakage model: evanescent tunneling through each aperture and
the additive multi-aperture transmission loss.

Valid strictly below the aperture corner frequency; the stopband is handled
by :mod:`herd.cascade`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, InfeasibleDesignError
from .model import FilterDesign, FrequencyGrid
from .modes import corner_frequency, dominant_mode_index, rect_gamma


@dataclass(frozen=True)
class InbandLossBreakdown:
    """One in-band operating point of the leakage model.

    ``per_aperture_leak_power`` is |F|^2, the power fraction lost to a single
    aperture; ``total_transmission`` is (1 - |F|^2)**A over all A apertures.
    """

    frequency: float
    per_aperture_leak_power: float
    total_transmission: float
    insertion_loss_db: float


def _dominant_gamma(design: FilterDesign, f: float) -> float:
    """Real attenuation constant of the dominant aperture mode, f below corner."""
    fc = corner_frequency(design)
    if not (math.isfinite(f) and f > 0.0):
        raise DomainError(f"frequency must be finite and > 0 (got {f!r})")
    if f >= fc:
        raise DomainError(
            f"frequency {f!r} Hz is at or above the aperture corner frequency "
            f"{fc!r} Hz; the in-band leakage model does not apply there"
        )
    return rect_gamma(dominant_mode_index(design), design.aperture, design.aperture_fill, f).real


def evanescent_amplitude(design: FilterDesign, f: float) -> float:
    """Field amplitude F = exp(-gamma d) surviving one aperture depth."""
    return math.exp(-_dominant_gamma(design, f) * design.aperture.depth_d)


def inband_transmission(design: FilterDesign, f: float) -> InbandLossBreakdown:
    """Total in-band transmission with loss additive over all apertures."""
    amp = evanescent_amplitude(design, f)
    leak = amp * amp
    total = (1.0 - leak) ** design.total_apertures
    return InbandLossBreakdown(
        frequency=f,
        per_aperture_leak_power=leak,
        total_transmission=total,
        insertion_loss_db=-10.0 * math.log10(total),
    )


def mismatch_loss_db(return_loss_db: float) -> float:
    """Insertion loss implied by a reflection floor: -10 log10(1 - 10**(RL/10)).

    ``return_loss_db`` is negative by convention (e.g. -20 dB -> 0.044 dB).
    """
    if not (math.isfinite(return_loss_db) and return_loss_db < 0.0):
        raise DomainError(f"return loss must be finite and < 0 dB (got {return_loss_db!r})")
    return -10.0 * math.log10(1.0 - 10.0 ** (return_loss_db / 10.0))


def min_depth_for_budget(design: FilterDesign, f: float, budget_db: float) -> float:
    """Smallest aperture depth whose in-band loss at ``f`` stays within
    ``budget_db``; closed-form inverse of :func:`inband_transmission`."""
    if not (math.isfinite(budget_db) and budget_db > 0.0):
        raise DomainError(f"budget must be finite and > 0 dB (got {budget_db!r})")
    gamma = _dominant_gamma(design, f)
    amp_required = math.sqrt(1.0 - 10.0 ** (-budget_db / (10.0 * design.total_apertures)))
    if not 0.0 < amp_required <= 1.0:
        raise InfeasibleDesignError(
            f"no aperture depth satisfies the {budget_db!r} dB budget at {f!r} Hz"
        )
    return max(-math.log(amp_required) / gamma, 0.0)


def inband_loss_curve(design: FilterDesign, grid: FrequencyGrid) -> list[InbandLossBreakdown]:
    """Pointwise :func:`inband_transmission` over a grid (all points must lie
    below the corner frequency)."""
    return [inband_transmission(design, f) for f in grid]

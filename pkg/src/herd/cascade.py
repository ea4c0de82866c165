"""Full-band S-parameter prediction by cascading per-section two-ports.

Per section, the power transmission is the in-band evanescent value below the
aperture corner frequency and a calibrated per-aperture drain above it, with
a logistic blend across the corner so the curve stays smooth. Sections are
chained through transfer (T) matrices.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

import numpy as np

from .constants import C0
from .errors import DomainError
from .model import FilterDesign, FrequencyGrid
from .modes import corner_frequency, dominant_mode_index, rect_gamma

# Fraction of the corner frequency over which the below/above-cutoff branches
# are blended. The logistic runs from 1% to 99% across that band.
DEFAULT_TRANSITION_WIDTH = 0.10
_LOGISTIC_SHARPNESS = 2.0 * math.log(99.0)


class Provenance(enum.Enum):
    MODEL = "MODEL"
    MEASURED = "MEASURED"


@dataclass(frozen=True)
class TwoPort:
    """2x2 scattering matrix at a single frequency."""

    s11: complex
    s12: complex
    s21: complex
    s22: complex
    z0: float = 50.0

    def max_singular_value(self) -> float:
        matrix = np.array([[self.s11, self.s12], [self.s21, self.s22]], dtype=complex)
        return float(np.linalg.svd(matrix, compute_uv=False)[0])

    def is_passive(self, tol: float = 1e-9) -> bool:
        return self.max_singular_value() <= 1.0 + tol

    @property
    def is_reciprocal(self) -> bool:
        return self.s12 == self.s21


@dataclass(frozen=True)
class SParamTable:
    """Frequency grid plus one two-port per grid point."""

    grid: FrequencyGrid
    entries: tuple[TwoPort, ...]
    provenance: Provenance
    label: str = ""
    mag_only: bool = False

    def __post_init__(self):
        if len(self.entries) != len(self.grid):
            raise DomainError(
                f"table needs one entry per grid point "
                f"(got {len(self.entries)} entries for {len(self.grid)} points)"
            )


def _blend_weight(f: float, fc: float, transition_width: float) -> float:
    """Logistic stopband weight: 0 deep in band, 1/2 at the corner, 1 above."""
    arg = _LOGISTIC_SHARPNESS * (f - fc) / (transition_width * fc)
    if arg <= -700.0:
        return 0.0
    if arg >= 700.0:
        return 1.0
    return 1.0 / (1.0 + math.exp(-arg))


def section_two_port(
    design: FilterDesign,
    f: float,
    transition_width: float = DEFAULT_TRANSITION_WIDTH,
    return_loss_floor_db: float | None = None,
) -> TwoPort:
    """Two-port of a single section at frequency ``f``.

    |s21|^2 follows the evanescent per-aperture loss below the corner and the
    (1 - kappa)**apertures drain above it; s21 carries the ideal line phase
    over one section pitch. The default model is matched (s11 = s22 = 0); an
    optional constant return-loss floor adds a quadrature reflection sized to
    keep the section passive.
    """
    if not (math.isfinite(f) and f > 0.0):
        raise DomainError(f"frequency must be finite and > 0 (got {f!r})")
    if not 0.0 < transition_width < 1.0:
        raise DomainError(f"transition width must lie in (0, 1) (got {transition_width!r})")
    fc = corner_frequency(design)
    n_ap = design.apertures_per_section

    if f < fc:
        gamma = rect_gamma(dominant_mode_index(design), design.aperture, design.aperture_fill, f).real
        amp = math.exp(-gamma * design.aperture.depth_d)
        t_below = (1.0 - amp * amp) ** n_ap
    else:
        t_below = 0.0
    t_above = (1.0 - design.stopband_kappa) ** n_ap

    weight = _blend_weight(f, fc, transition_width)
    t_power = (1.0 - weight) * t_below + weight * t_above

    phase = cmath.exp(-2j * math.pi * f * design.section_pitch * design.coax_fill.refractive_index / C0)
    if return_loss_floor_db is None:
        s21 = math.sqrt(t_power) * phase
        s11 = 0j
    else:
        if not (math.isfinite(return_loss_floor_db) and return_loss_floor_db < 0.0):
            raise DomainError(
                f"return-loss floor must be finite and < 0 dB (got {return_loss_floor_db!r})"
            )
        refl = 10.0 ** (return_loss_floor_db / 20.0)
        s21 = math.sqrt((1.0 - refl * refl) * t_power) * phase
        s11 = 1j * refl * phase
    return TwoPort(s11=s11, s12=s21, s21=s21, s22=s11)


def cascade(ports: list[TwoPort]) -> TwoPort:
    """S-matrix of two-ports chained in order, via T-matrix composition."""
    if not ports:
        raise DomainError("cannot cascade an empty list of two-ports")
    z0 = ports[0].z0
    for port in ports:
        if port.z0 != z0:
            raise DomainError(
                f"all two-ports must share one reference impedance (got {port.z0!r} vs {z0!r})"
            )
        if port.s21 == 0:
            raise DomainError("cannot cascade a two-port with zero transmission (s21 = 0)")
    if len(ports) == 1:
        return ports[0]

    t11, t12, t21, t22 = complex(1.0), complex(0.0), complex(0.0), complex(1.0)
    for port in ports:
        p11 = (port.s12 * port.s21 - port.s11 * port.s22) / port.s21
        p12 = port.s11 / port.s21
        p21 = -port.s22 / port.s21
        p22 = 1.0 / port.s21
        t11, t12, t21, t22 = (
            t11 * p11 + t12 * p21,
            t11 * p12 + t12 * p22,
            t21 * p11 + t22 * p21,
            t21 * p12 + t22 * p22,
        )

    s21 = 1.0 / t22
    if all(p.is_reciprocal for p in ports):
        s12 = s21
    else:
        det = complex(1.0)
        for port in ports:
            det *= port.s12 / port.s21
        s12 = det * s21
    return TwoPort(s11=t12 / t22, s12=s12, s21=s21, s22=-t21 / t22, z0=z0)


def filter_response(
    design: FilterDesign,
    grid: FrequencyGrid,
    transition_width: float = DEFAULT_TRANSITION_WIDTH,
    return_loss_floor_db: float | None = None,
) -> SParamTable:
    """Cascaded response of all sections over a frequency grid.

    Points are independent and evaluated in grid order, so the result is
    deterministic regardless of evaluation strategy.
    """
    entries = []
    for f in grid:
        section = section_two_port(design, f, transition_width, return_loss_floor_db)
        entries.append(cascade([section] * design.sections))
    return SParamTable(
        grid=grid,
        entries=tuple(entries),
        provenance=Provenance.MODEL,
        label=f"cascade model, {design.sections} sections",
    )


def attenuation_vs_sections(
    design: FilterDesign, f: float, max_sections: int
) -> list[tuple[int, float]]:
    """Attenuation at ``f`` for 1..max_sections sections [(count, dB)].

    Matched identical sections make this exactly linear in the count.
    """
    if max_sections < 1:
        raise DomainError(f"max_sections must be >= 1 (got {max_sections!r})")
    section = section_two_port(design, f)
    out = []
    chain = section
    for count in range(1, max_sections + 1):
        if count > 1:
            chain = cascade([chain, section])
        out.append((count, -20.0 * math.log10(abs(chain.s21))))
    return out


def calibrate_kappa(design: FilterDesign, f_ref: float, target_total_db: float) -> float:
    """Per-aperture drain fraction giving ``target_total_db`` of attenuation
    from the full section count.

    The drain model is frequency-flat, so ``f_ref`` only records where the
    target is anchored; it does not enter the closed form.
    """
    if not (math.isfinite(f_ref) and f_ref > 0.0):
        raise DomainError(f"f_ref must be finite and > 0 (got {f_ref!r})")
    if not (math.isfinite(target_total_db) and target_total_db >= 0.0):
        raise DomainError(f"target attenuation must be finite and >= 0 dB (got {target_total_db!r})")
    return 1.0 - 10.0 ** (-target_total_db / (10.0 * design.total_apertures))

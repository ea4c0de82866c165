"""Closed-form mode arithmetic for the coaxial line and rectangular apertures.

Pure functions of immutable inputs; everything is SI (Hz, m, Np/m).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .constants import C0, ETA0
from .errors import DomainError
from .model import CoaxGeometry, DominantModeAxis, FilterDesign, Material, RectAperture


@dataclass(frozen=True)
class ModeIndex:
    """TE mode numbers (m along the width, n along the height)."""

    m: int
    n: int

    def __post_init__(self):
        if self.m < 0 or self.n < 0:
            raise DomainError(f"mode numbers must be non-negative (got {self.m}, {self.n})")
        if self.m == 0 and self.n == 0:
            raise DomainError("TE00 does not exist")


@dataclass(frozen=True)
class ModeEntry:
    index: ModeIndex
    cutoff_hz: float


def _check_geometry(geom: CoaxGeometry) -> None:
    if not (math.isfinite(geom.r_inner) and geom.r_inner > 0.0):
        raise DomainError(f"r_inner must be finite and > 0 (got {geom.r_inner!r})")
    if not (math.isfinite(geom.r_outer) and geom.r_outer > geom.r_inner):
        raise DomainError(
            f"r_outer must exceed r_inner (got r_inner={geom.r_inner!r}, r_outer={geom.r_outer!r})"
        )


def _check_fill(fill: Material) -> None:
    if not (math.isfinite(fill.eps_r) and fill.eps_r >= 1.0):
        raise DomainError(f"eps_r must be finite and >= 1 (got {fill.eps_r!r})")
    if not (math.isfinite(fill.mu_r) and fill.mu_r >= 1.0):
        raise DomainError(f"mu_r must be finite and >= 1 (got {fill.mu_r!r})")


def _check_aperture(ap: RectAperture) -> None:
    for name, value in (("width_a", ap.width_a), ("height_b", ap.height_b), ("depth_d", ap.depth_d)):
        if not (math.isfinite(value) and value > 0.0):
            raise DomainError(f"aperture.{name} must be finite and > 0 (got {value!r})")


def coax_char_impedance(geom: CoaxGeometry, fill: Material) -> float:
    """TEM characteristic impedance of a cylindrical coax [ohm].

    Z0 = eta0/(2 pi) * sqrt(mu_r/eps_r) * ln(r_outer/r_inner)
    """
    _check_geometry(geom)
    _check_fill(fill)
    return ETA0 / (2.0 * math.pi) * math.sqrt(fill.mu_r / fill.eps_r) * math.log(geom.ratio)


def coax_ratio_for_impedance(z0: float, fill: Material) -> float:
    """Radius ratio r_outer/r_inner giving impedance ``z0`` (inverse of
    :func:`coax_char_impedance`)."""
    if not (math.isfinite(z0) and z0 > 0.0):
        raise DomainError(f"z0 must be finite and > 0 (got {z0!r})")
    _check_fill(fill)
    return math.exp(2.0 * math.pi * z0 / (ETA0 * math.sqrt(fill.mu_r / fill.eps_r)))


def coax_first_higher_mode_cutoff(geom: CoaxGeometry, fill: Material) -> float:
    """Onset of the lowest non-TEM coax mode, from the mean-circumference
    approximation lambda = pi (r_outer + r_inner) [Hz]."""
    _check_geometry(geom)
    _check_fill(fill)
    return C0 / (fill.refractive_index * math.pi * (geom.r_outer + geom.r_inner))


def solve_inner_radius(z0: float, f_single_mode: float, fill: Material) -> CoaxGeometry:
    """Coax radii matching impedance ``z0`` with the first higher mode placed
    at ``f_single_mode``."""
    if not (math.isfinite(f_single_mode) and f_single_mode > 0.0):
        raise DomainError(f"f_single_mode must be finite and > 0 (got {f_single_mode!r})")
    ratio = coax_ratio_for_impedance(z0, fill)
    r_inner = C0 / (fill.refractive_index * f_single_mode * math.pi * (1.0 + ratio))
    return CoaxGeometry(r_inner=r_inner, r_outer=r_inner * ratio)


def rect_cutoff(index: ModeIndex, ap: RectAperture, fill: Material) -> float:
    """TE(m,n) cutoff frequency of a filled rectangular waveguide [Hz]."""
    _check_aperture(ap)
    _check_fill(fill)
    return (
        C0
        / (2.0 * fill.refractive_index)
        * math.hypot(index.m / ap.width_a, index.n / ap.height_b)
    )


def rect_gamma(index: ModeIndex, ap: RectAperture, fill: Material, f: float) -> complex:
    """Propagation constant of TE(m,n) at frequency ``f`` [1/m].

    Below cutoff: purely real attenuation constant sqrt(kc^2 - k0^2) in Np/m.
    Above cutoff: purely imaginary phase constant. Exactly at cutoff: 0.
    """
    if not (math.isfinite(f) and f > 0.0):
        raise DomainError(f"frequency must be finite and > 0 (got {f!r})")
    fc = rect_cutoff(index, ap, fill)
    scale = 2.0 * math.pi * fill.refractive_index / C0
    if f < fc:
        return complex(scale * math.sqrt((fc - f) * (fc + f)), 0.0)
    if f > fc:
        return complex(0.0, scale * math.sqrt((f - fc) * (f + fc)))
    return 0j


def mode_chart(ap: RectAperture, fill: Material, f_max: float) -> list[ModeEntry]:
    """All TE modes with cutoff <= ``f_max``, sorted ascending by cutoff."""
    if not (math.isfinite(f_max) and f_max > 0.0):
        raise DomainError(f"f_max must be finite and > 0 (got {f_max!r})")
    _check_aperture(ap)
    _check_fill(fill)
    # Index bound guarantees completeness: TE(m,0) cutoff exceeds f_max once
    # m > 2 f_max a sqrt(eps mu) / c0, and likewise along the height.
    m_max = math.ceil(2.0 * f_max * ap.width_a * fill.refractive_index / C0) + 1
    n_max = math.ceil(2.0 * f_max * ap.height_b * fill.refractive_index / C0) + 1
    entries = []
    for m in range(m_max + 1):
        for n in range(n_max + 1):
            if m == 0 and n == 0:
                continue
            fc = rect_cutoff(ModeIndex(m, n), ap, fill)
            if fc <= f_max:
                entries.append(ModeEntry(ModeIndex(m, n), fc))
    entries.sort(key=lambda e: (e.cutoff_hz, e.index.m, e.index.n))
    return entries


def dominant_mode_index(design: FilterDesign) -> ModeIndex:
    """Index of the aperture mode selected by ``dominant_mode_axis``."""
    if design.dominant_mode_axis is DominantModeAxis.HEIGHT:
        return ModeIndex(0, 1)
    return ModeIndex(1, 0)


def corner_frequency(design: FilterDesign) -> float:
    """Stopband onset: cutoff of the dominant aperture mode in the fill [Hz].

    With the default WIDTH axis this is c0 / (2 a sqrt(eps_r mu_r)); the
    aperture height does not enter.
    """
    return rect_cutoff(dominant_mode_index(design), design.aperture, design.aperture_fill)

"""Design and verification toolkit for leaky-coax low-pass filters.

Closed-form mode/impedance models, an evanescent in-band leakage model, a
cascaded-section stopband model, inverse synthesis from performance targets,
Touchstone I/O and claim checking, all behind the ``herd`` CLI.
"""

from .cascade import (
    DEFAULT_TRANSITION_WIDTH,
    Provenance,
    SParamTable,
    TwoPort,
    attenuation_vs_sections,
    calibrate_kappa,
    cascade,
    filter_response,
    section_two_port,
)
from .constants import C0, ELEMENTARY_CHARGE, ETA0, PLANCK_H
from .errors import DomainError, HerdError, InfeasibleDesignError, ParseError
from .leakage import (
    InbandLossBreakdown,
    evanescent_amplitude,
    inband_loss_curve,
    inband_transmission,
    min_depth_for_budget,
    mismatch_loss_db,
)
from .model import (
    AIR,
    DEFAULT_APERTURES_PER_SECTION,
    DEFAULT_SECTION_PITCH,
    DEFAULT_STOPBAND_KAPPA,
    PTFE,
    CoaxGeometry,
    DominantModeAxis,
    FilterDesign,
    FrequencyGrid,
    Material,
    RectAperture,
    dumps_design,
    loads_design,
    prototype_design,
    validate,
    with_aperture,
)
from .modes import (
    ModeEntry,
    ModeIndex,
    coax_char_impedance,
    coax_first_higher_mode_cutoff,
    coax_ratio_for_impedance,
    corner_frequency,
    mode_chart,
    rect_cutoff,
    rect_gamma,
    solve_inner_radius,
)
from .synthesis import (
    DesignSpec,
    SynthesisReport,
    dumps_design_spec,
    loads_design_spec,
    octagon_face_width,
    pair_breaking_frequency,
    per_section_attenuation_db,
    synthesize,
    verify,
)
from .tsio import (
    BandMetric,
    Claim,
    ClaimKind,
    ClaimResult,
    ComplianceReport,
    band_metrics,
    check_claims,
    insertion_loss_db,
    parse_touchstone,
    return_loss_db,
    write_touchstone,
)

__version__ = "0.1.0"

__all__ = [
    "AIR",
    "BandMetric",
    "C0",
    "Claim",
    "ClaimKind",
    "ClaimResult",
    "CoaxGeometry",
    "ComplianceReport",
    "DEFAULT_APERTURES_PER_SECTION",
    "DEFAULT_SECTION_PITCH",
    "DEFAULT_STOPBAND_KAPPA",
    "DEFAULT_TRANSITION_WIDTH",
    "DesignSpec",
    "DominantModeAxis",
    "DomainError",
    "ELEMENTARY_CHARGE",
    "ETA0",
    "FilterDesign",
    "FrequencyGrid",
    "HerdError",
    "InbandLossBreakdown",
    "InfeasibleDesignError",
    "Material",
    "ModeEntry",
    "ModeIndex",
    "PLANCK_H",
    "PTFE",
    "ParseError",
    "Provenance",
    "RectAperture",
    "SParamTable",
    "SynthesisReport",
    "TwoPort",
    "attenuation_vs_sections",
    "band_metrics",
    "calibrate_kappa",
    "cascade",
    "check_claims",
    "coax_char_impedance",
    "coax_first_higher_mode_cutoff",
    "coax_ratio_for_impedance",
    "corner_frequency",
    "dumps_design",
    "dumps_design_spec",
    "evanescent_amplitude",
    "filter_response",
    "inband_loss_curve",
    "inband_transmission",
    "insertion_loss_db",
    "loads_design",
    "loads_design_spec",
    "min_depth_for_budget",
    "mismatch_loss_db",
    "mode_chart",
    "octagon_face_width",
    "pair_breaking_frequency",
    "parse_touchstone",
    "per_section_attenuation_db",
    "prototype_design",
    "rect_cutoff",
    "rect_gamma",
    "return_loss_db",
    "section_two_port",
    "solve_inner_radius",
    "synthesize",
    "validate",
    "verify",
    "with_aperture",
    "write_touchstone",
]

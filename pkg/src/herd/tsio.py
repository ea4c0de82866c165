"""Touchstone (.s2p) reading/writing, band metrics and compliance checking.

Touchstone v1 two-port only. The option line must read
``# <unit> S <format> R <z>`` with unit in {HZ, KHZ, MHZ, GHZ} and format in
{RI, MA, DB}; data rows carry 9 numbers in S11 S21 S12 S22 order. A
nonstandard ``!MAGONLY`` comment directive marks magnitude-only measurements:
phases are zeroed and the table is flagged, which leaves every magnitude
metric valid.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

from .cascade import Provenance, SParamTable, TwoPort
from .errors import DomainError, ParseError
from .model import FrequencyGrid

FREQUENCY_UNITS = {"HZ": 1.0, "KHZ": 1e3, "MHZ": 1e6, "GHZ": 1e9}
FORMATS = ("RI", "MA", "DB")

# Zero magnitude cannot be written in DB format; clamp at -400 dB (1e-20),
# indistinguishable from zero at any metric tolerance used here.
_DB_FLOOR = -400.0


@dataclass(frozen=True)
class BandMetric:
    """Scalar figures of a table inside one closed frequency band."""

    band: tuple[float, float]
    max_insertion_loss_db: float
    min_attenuation_db: float
    max_ripple_db: float
    worst_return_loss_db: float


class ClaimKind(enum.Enum):
    MAX_IL = "MAX_IL"
    MIN_ATT = "MIN_ATT"
    MAX_RIPPLE = "MAX_RIPPLE"


@dataclass(frozen=True)
class Claim:
    band: tuple[float, float]
    kind: ClaimKind
    threshold_db: float
    description: str = ""

    def describe(self) -> str:
        if self.description:
            return self.description
        lo, hi = self.band
        return f"{self.kind.value} {self.threshold_db:g} dB over [{lo:g}, {hi:g}] Hz"


@dataclass(frozen=True)
class ClaimResult:
    description: str
    band: tuple[float, float]
    kind: ClaimKind
    threshold_db: float
    observed_db: float | None
    passed: bool
    error: str | None = None


@dataclass(frozen=True)
class ComplianceReport:
    results: tuple[ClaimResult, ...]

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results)


def _pair_to_complex(fmt: str, first: float, second: float) -> complex:
    if fmt == "RI":
        return complex(first, second)
    if fmt == "MA":
        return first * cmath.exp(1j * math.radians(second))
    return 10.0 ** (first / 20.0) * cmath.exp(1j * math.radians(second))


def parse_touchstone(text: str) -> SParamTable:
    """Parse Touchstone v1 two-port text into a MEASURED table."""
    unit_scale = None
    fmt = None
    z0 = 50.0
    mag_only = False
    freqs: list[float] = []
    entries: list[TwoPort] = []
    lineno = 0

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw
        bang = line.find("!")
        if bang >= 0:
            if line[bang + 1 :].strip().upper() == "MAGONLY":
                mag_only = True
            line = line[:bang]
        line = line.strip()
        if not line:
            continue

        if line.startswith("["):
            raise ParseError("Touchstone v2 blocks are not supported", line=lineno)

        if line.startswith("#"):
            if fmt is not None:
                raise ParseError("more than one option line", line=lineno)
            tokens = line[1:].split()
            if (
                len(tokens) != 5
                or tokens[0].upper() not in FREQUENCY_UNITS
                or tokens[1].upper() != "S"
                or tokens[2].upper() not in FORMATS
                or tokens[3].upper() != "R"
            ):
                raise ParseError(
                    f"malformed option line {raw.strip()!r}; expected "
                    "'# <HZ|KHZ|MHZ|GHZ> S <RI|MA|DB> R <impedance>'",
                    line=lineno,
                )
            try:
                z0 = float(tokens[4])
            except ValueError:
                raise ParseError(f"bad reference impedance {tokens[4]!r}", line=lineno) from None
            unit_scale = FREQUENCY_UNITS[tokens[0].upper()]
            fmt = tokens[2].upper()
            continue

        if fmt is None:
            raise ParseError("data row before the option line", line=lineno)
        tokens = line.split()
        if len(tokens) != 9:
            raise ParseError(f"expected 9 columns, got {len(tokens)}", line=lineno)
        try:
            values = [float(token) for token in tokens]
        except ValueError:
            raise ParseError(f"non-numeric data in row {raw.strip()!r}", line=lineno) from None

        f_hz = values[0] * unit_scale
        if freqs and f_hz <= freqs[-1]:
            raise ParseError(
                f"frequencies must be strictly increasing ({freqs[-1]!r} Hz -> {f_hz!r} Hz)",
                line=lineno,
            )
        s11 = _pair_to_complex(fmt, values[1], values[2])
        s21 = _pair_to_complex(fmt, values[3], values[4])
        s12 = _pair_to_complex(fmt, values[5], values[6])
        s22 = _pair_to_complex(fmt, values[7], values[8])
        freqs.append(f_hz)
        entries.append(TwoPort(s11=s11, s12=s12, s21=s21, s22=s22, z0=z0))

    if fmt is None:
        raise ParseError("missing option line", line=lineno)
    if not entries:
        raise ParseError("no data rows", line=lineno)
    if mag_only:
        entries = [
            TwoPort(
                s11=complex(abs(p.s11), 0.0),
                s12=complex(abs(p.s12), 0.0),
                s21=complex(abs(p.s21), 0.0),
                s22=complex(abs(p.s22), 0.0),
                z0=p.z0,
            )
            for p in entries
        ]
    return SParamTable(
        grid=FrequencyGrid(tuple(freqs)),
        entries=tuple(entries),
        provenance=Provenance.MEASURED,
        mag_only=mag_only,
    )


def _complex_to_pair(fmt: str, value: complex) -> tuple[float, float]:
    if fmt == "RI":
        return value.real, value.imag
    mag = abs(value)
    ang = math.degrees(cmath.phase(value))
    if fmt == "MA":
        return mag, ang
    if mag == 0.0:
        return _DB_FLOOR, ang
    return max(20.0 * math.log10(mag), _DB_FLOOR), ang


def write_touchstone(table: SParamTable, fmt: str = "RI", unit: str = "HZ") -> str:
    """Serialize a table as Touchstone v1 text, 17 significant digits."""
    fmt = fmt.upper()
    unit = unit.upper()
    if fmt not in FORMATS:
        raise DomainError(f"format must be one of {FORMATS} (got {fmt!r})")
    if unit not in FREQUENCY_UNITS:
        raise DomainError(f"unit must be one of {tuple(FREQUENCY_UNITS)} (got {unit!r})")
    if not table.entries:
        raise DomainError("cannot write an empty table")

    scale = FREQUENCY_UNITS[unit]
    lines = [f"! herd S-parameter table: {table.label or table.provenance.value}"]
    if table.mag_only:
        lines.append("!MAGONLY")
    lines.append(f"# {unit} S {fmt} R {table.entries[0].z0:.17g}")
    for f, port in zip(table.grid, table.entries):
        fields = [f"{f / scale:.17g}"]
        for s in (port.s11, port.s21, port.s12, port.s22):
            first, second = _complex_to_pair(fmt, s)
            fields.append(f"{first:.17g}")
            fields.append(f"{second:.17g}")
        lines.append(" ".join(fields))
    return "\n".join(lines) + "\n"


def insertion_loss_db(port: TwoPort) -> float:
    """-20 log10 |s21|; +inf for zero transmission."""
    mag = abs(port.s21)
    return math.inf if mag == 0.0 else -20.0 * math.log10(mag)


def return_loss_db(port: TwoPort) -> float:
    """20 log10 |s11|; -inf for a perfect match."""
    mag = abs(port.s11)
    return -math.inf if mag == 0.0 else 20.0 * math.log10(mag)


def band_metrics(table: SParamTable, band: tuple[float, float]) -> BandMetric:
    """Insertion-loss / attenuation / ripple / return-loss figures over the
    closed band, from the grid points inside it."""
    lo, hi = band
    if not lo < hi:
        raise DomainError(f"band must satisfy f_low < f_high (got {lo!r}, {hi!r})")
    inside = [port for f, port in zip(table.grid, table.entries) if lo <= f <= hi]
    if not inside:
        raise DomainError(f"no grid points inside band [{lo!r}, {hi!r}] Hz")
    losses = [insertion_loss_db(port) for port in inside]
    return BandMetric(
        band=band,
        max_insertion_loss_db=max(losses),
        min_attenuation_db=min(losses),
        max_ripple_db=max(losses) - min(losses),
        worst_return_loss_db=max(return_loss_db(port) for port in inside),
    )


def check_claims(table: SParamTable, claims: list[Claim]) -> ComplianceReport:
    """Evaluate each claim against the table; a band without data yields an
    error row rather than an exception."""
    results = []
    for claim in claims:
        try:
            metric = band_metrics(table, claim.band)
        except DomainError as exc:
            results.append(
                ClaimResult(
                    description=claim.describe(),
                    band=claim.band,
                    kind=claim.kind,
                    threshold_db=claim.threshold_db,
                    observed_db=None,
                    passed=False,
                    error=str(exc),
                )
            )
            continue
        if claim.kind is ClaimKind.MAX_IL:
            observed = metric.max_insertion_loss_db
            passed = observed <= claim.threshold_db
        elif claim.kind is ClaimKind.MIN_ATT:
            observed = metric.min_attenuation_db
            passed = observed >= claim.threshold_db
        else:
            observed = metric.max_ripple_db
            passed = observed <= claim.threshold_db
        results.append(
            ClaimResult(
                description=claim.describe(),
                band=claim.band,
                kind=claim.kind,
                threshold_db=claim.threshold_db,
                observed_db=observed,
                passed=passed,
            )
        )
    return ComplianceReport(results=tuple(results))

"""Phaser parameters for a given OFDM profile, and a physical-feasibility check."""

from __future__ import annotations

import enum
import math
from dataclasses import asdict, dataclass, field

import numpy as np

from .errors import InvalidArgumentError
from .phaser import PhaserParams, delay_swing

# Dispersion routinely reached by microwave phasers, ~1 ns^2/rad.
PHI2_TYPICAL = 1e-18
# Default acceptance bounds of :func:`feasibility`.
PHI2_PRACTICAL_MAX = 1e-16
CENTER_DELAY_MAX = 100e-9


class Phi1Case(enum.Enum):
    """Where the transmitter's output window sits on the time axis."""

    ZeroStart = "ZeroStart"  # window [0, T0]
    PhaseAligned = "PhaseAligned"  # window [T0/2, 3T0/2]


class Phi2Sign(enum.Enum):
    Plus = "Plus"
    Minus = "Minus"


@dataclass(frozen=True)
class OfdmProfile:
    N: int
    Ts: float
    phi1_case: Phi1Case = Phi1Case.PhaseAligned
    phi2_sign: Phi2Sign = Phi2Sign.Plus

    def __post_init__(self):
        if int(self.N) != self.N or self.N < 1:
            raise InvalidArgumentError(f"N must be an integer >= 1, got {self.N!r}")
        if not (self.Ts > 0 and math.isfinite(self.Ts)):
            raise InvalidArgumentError(f"Ts must be positive and finite, got {self.Ts!r}")
        object.__setattr__(self, "N", int(self.N))
        object.__setattr__(self, "Ts", float(self.Ts))
        object.__setattr__(self, "phi1_case", Phi1Case(self.phi1_case))
        object.__setattr__(self, "phi2_sign", Phi2Sign(self.phi2_sign))

    @property
    def T0(self) -> float:
        return self.N * self.Ts

    @property
    def phi2_magnitude(self) -> float:
        """``N Ts^2 / (2 pi)``: maps the Nyquist band onto exactly ``T0``."""
        return self.N * self.Ts * self.Ts / (2 * math.pi)

    @property
    def tx_window_start(self) -> float:
        """Start of the transmit output window, where payload sample 0 sits."""
        return 0.0 if self.phi1_case is Phi1Case.ZeroStart else self.T0 / 2


def default_carrier(profile: OfdmProfile) -> float:
    """Carrier ``pi/Ts + 20 pi/T0`` rad/s: ten subcarrier spacings above the band edge."""
    return math.pi / profile.Ts + 20 * math.pi / profile.T0


def tx_params(profile: OfdmProfile, omega_c: float | None = None) -> PhaserParams:
    phi2 = profile.phi2_magnitude
    if profile.phi2_sign is Phi2Sign.Minus:
        phi2 = -phi2
    phi1 = -profile.T0 / 2 if profile.phi1_case is Phi1Case.ZeroStart else -profile.T0
    wc = default_carrier(profile) if omega_c is None else omega_c
    return PhaserParams(phi0=0.0, phi1=phi1, phi2=phi2, omega_c=wc)


def rx_params(tx: PhaserParams) -> PhaserParams:
    """Receiver phaser: no bulk delay and the opposite dispersion."""
    return PhaserParams(phi0=tx.phi0, phi1=0.0, phi2=-tx.phi2, omega_c=tx.omega_c)


@dataclass(frozen=True)
class FeasibilityReport:
    phi2_magnitude: float
    delay_swing: float
    center_delay: float
    bandwidth: float
    practical: bool
    notes: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return asdict(self)


def feasibility(
    profile: OfdmProfile,
    bandwidth: float | None = None,
    phi2_practical_max: float = PHI2_PRACTICAL_MAX,
    center_delay_max: float = CENTER_DELAY_MAX,
) -> FeasibilityReport:
    """Check the transmitter phaser against practical dispersion and delay bounds.

    ``bandwidth`` [Hz] defaults to the occupied band ``1/Ts``.
    """
    if bandwidth is None:
        bandwidth = 1.0 / profile.Ts
    if not bandwidth > 0:
        raise InvalidArgumentError("bandwidth must be > 0")
    tx = tx_params(profile)
    mag = abs(tx.phi2)
    swing = delay_swing(mag, bandwidth)
    center = -tx.phi1
    notes = []
    ok_phi2 = mag <= phi2_practical_max
    ok_delay = center <= center_delay_max
    if not ok_phi2:
        notes.append(f"|phi2| = {mag:.4g} s^2/rad exceeds {phi2_practical_max:.4g} s^2/rad")
    if not ok_delay:
        notes.append(f"center delay {center:.4g} s exceeds {center_delay_max:.4g} s")
    if mag > PHI2_TYPICAL:
        notes.append(
            f"|phi2| is {mag / PHI2_TYPICAL:.3g}x the typical 1 ns^2/rad of a single phaser"
        )
    if profile.phi1_case is Phi1Case.PhaseAligned and ok_phi2 and not ok_delay:
        notes.append("phase-aligned placement needs a bulk delay of T0; zero-start halves it")
    return FeasibilityReport(
        phi2_magnitude=mag,
        delay_swing=swing,
        center_delay=center,
        bandwidth=float(bandwidth),
        practical=bool(ok_phi2 and ok_delay),
        notes=notes,
    )


@dataclass(frozen=True)
class BandPreset:
    name: str
    carrier_hz: float
    max_Ts: float
    description: str


BAND_PRESETS = {
    "28GHz": BandPreset("28GHz", 28e9, 1e-9, "5G microwave band around 28 GHz"),
    "60GHz": BandPreset("60GHz", 60e9, 0.5e-9, "millimetre-wave band around 60 GHz"),
    "252-325GHz": BandPreset("252-325GHz", 288.5e9, 0.02e-9, "sub-THz band 252-325 GHz"),
    # Illustrative only: symbol periods this long need impractical dispersion.
    "sub6": BandPreset("sub6", 5e9, 50e-9, "sub-6 GHz example"),
}


def band_preset(name: str) -> BandPreset:
    try:
        return BAND_PRESETS[name]
    except KeyError:
        known = ", ".join(sorted(BAND_PRESETS))
        raise InvalidArgumentError(f"unknown band preset {name!r}; known: {known}") from None


def group_delay_line(profile: OfdmProfile, n_points: int = 201, tx: bool = True):
    """Group delay [s] against baseband frequency [Hz] across the Nyquist band."""
    params = tx_params(profile)
    if not tx:
        params = rx_params(params)
    f = np.linspace(-0.5 / profile.Ts, 0.5 / profile.Ts, int(n_points))
    tau = -params.phi1 - params.phi2 * (2 * np.pi * f)
    return f, tau

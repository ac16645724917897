# -*- coding: utf-8 -*-
"""
The pilot-wave factor of a moving droplet and the relations it implies.

A droplet bouncing at ω₀ and moving at v carries a wave
ψ = cos(kx − ωt) with k = γω₀v/c² and ω = γω₀, so ω² − c²k² = ω₀².
Multiplying by ƀ turns these into E² − p²c² = m₀²c⁴ and λ = b/p.
"""
import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional

import numpy as np
from numpy.typing import ArrayLike, NDArray

from common.errors import DomainError
from common.params import MediumParams

# The potential takes one coordinate array per dimension.
Potential = Callable[..., ArrayLike]


@dataclass(frozen=True)
class PilotWaveParams:
    """
    Constants of the slowly-varying pilot wave ψ_s.

    `bbar` ties the droplet mass to its bounce: ƀω₀ = m₀c². A potential V
    lowers the local bounce frequency, ƀω = m₀c² − V.
    """

    bbar: float
    m0: float
    omega0: float
    c: float
    potential: Optional[Potential] = None

    def __post_init__(self):
        for name in ("bbar", "m0", "omega0", "c"):
            value = getattr(self, name)
            if not math.isfinite(value) or value <= 0:
                raise DomainError(f"{name} must be positive, got {value}")
        rest = self.m0 * self.c**2
        if abs(self.bbar * self.omega0 - rest) > 1e-12 * rest:
            raise DomainError("bbar·omega0 must equal m0·c²")

    @staticmethod
    def from_medium(params: MediumParams, m0: float, potential: Optional[Potential] = None) -> "PilotWaveParams":
        return PilotWaveParams(
            bbar=m0 * params.c**2 / params.omega0,
            m0=m0,
            omega0=params.omega0,
            c=params.c,
            potential=potential,
        )

    @staticmethod
    def natural(potential: Optional[Potential] = None) -> "PilotWaveParams":
        """Units with c = ω₀ = m₀ = ƀ = 1."""
        return PilotWaveParams(bbar=1.0, m0=1.0, omega0=1.0, c=1.0, potential=potential)

    @property
    def rest_energy(self) -> float:
        return self.m0 * self.c**2

    @property
    def diffusivity(self) -> float:
        """ƀ/m₀ = c²/ω₀, the coefficient of ∇²ψ and of ∇θ in the guidance law."""
        return self.bbar / self.m0

    def energy(self, V: ArrayLike = 0.0) -> ArrayLike:
        """Local energy ƀω = m₀c² − V."""
        return self.rest_energy - np.asarray(V)

    def gamma(self, v: float) -> float:
        beta_sq = (v / self.c) ** 2
        if not math.isfinite(beta_sq) or beta_sq >= 1.0:
            raise DomainError(f"speed {v} is not below the wave speed {self.c}")
        return 1.0 / math.sqrt(1.0 - beta_sq)

    def potential_on(self, *coords: NDArray[np.float64]) -> NDArray[np.float64]:
        if self.potential is None:
            return np.zeros(np.broadcast_shapes(*(c.shape for c in coords)))
        return np.broadcast_to(
            np.asarray(self.potential(*coords), dtype=np.float64),
            np.broadcast_shapes(*(c.shape for c in coords)),
        ).copy()


def pilot_wavenumber(v_x: float, params: PilotWaveParams) -> tuple[float, float]:
    """(k, ω) = (γω₀v_x/c², γω₀) of the pilot wave of a droplet moving at v_x."""
    gamma = params.gamma(v_x)
    return gamma * params.omega0 * v_x / params.c**2, gamma * params.omega0


def energy_momentum(v_x: float, params: PilotWaveParams) -> tuple[float, float]:
    """(E, p) = (ƀω, ƀk); E² − p²c² = m₀²c⁴."""
    k, omega = pilot_wavenumber(v_x, params)
    return params.bbar * omega, params.bbar * k


def de_broglie_wavelength(v_x: float, params: PilotWaveParams) -> float:
    """
    λ = 2πc²/(ωv_x) = b/p with b = 2πƀ.

    A droplet at rest has no travelling wave: returns `math.inf`.
    """
    if v_x == 0:
        return math.inf
    _, omega = pilot_wavenumber(v_x, params)
    return 2 * math.pi * params.c**2 / (omega * abs(v_x))


def single_slit_first_minimum(lam: float, L: float) -> Optional[float]:
    """First diffraction minimum λ = L sin θ, in degrees; None when λ > L."""
    _check_lengths(lam, L)
    if lam > L:
        return None
    return math.degrees(math.asin(lam / L))


def double_slit_first_minimum(lam: float, d: float) -> Optional[float]:
    """First interference minimum, path difference λ/2, in degrees; None when λ > 2d."""
    _check_lengths(lam, d)
    if lam > 2 * d:
        return None
    return math.degrees(math.asin(lam / (2 * d)))


class SlitKind(Enum):
    SINGLE = "single"
    DOUBLE = "double"


def far_field_intensity(
    kind: SlitKind,
    lam: float,
    L: float,
    d: float,
    theta_grid: ArrayLike,
) -> NDArray[np.float64]:
    """
    Fraunhofer intensity, normalised to 1 at θ = 0.

    single: sinc²(πL sinθ/λ); double: cos²(πd sinθ/λ)·sinc²(πL sinθ/λ).
    `theta_grid` is in degrees.
    """
    _check_lengths(lam, L)
    s = np.sin(np.radians(np.asarray(theta_grid, dtype=np.float64)))
    # np.sinc is sin(πx)/(πx)
    envelope = np.sinc(L * s / lam) ** 2
    if kind is SlitKind.SINGLE:
        return envelope
    if d <= 0:
        raise DomainError(f"slit separation must be positive, got {d}")
    return np.cos(math.pi * d * s / lam) ** 2 * envelope


def gaussian_packet(
    x: ArrayLike,
    t: float,
    sigma0: float,
    k0: float,
    x0: float,
    params: PilotWaveParams,
) -> NDArray[np.complex128]:
    """
    Closed-form free Gaussian packet ψ_s(x, t), unit norm in one dimension.

    Width σ(t) = σ₀√(1 + (at/(2σ₀²))²) with a = ƀ/m₀; the centre moves at ak₀.
    """
    if sigma0 <= 0:
        raise DomainError(f"sigma0 must be positive, got {sigma0}")
    x = np.asarray(x, dtype=np.float64)
    a = params.diffusivity
    spread = 1.0 + 1j * a * t / (2 * sigma0**2)
    shifted = x - x0 - a * k0 * t
    norm = (2 * math.pi * sigma0**2) ** -0.25
    return (
        norm
        / np.sqrt(spread)
        * np.exp(-(shifted**2) / (4 * sigma0**2 * spread) + 1j * k0 * (x - x0) - 0.5j * a * k0**2 * t)
    )


def packet_width(t: float, sigma0: float, params: PilotWaveParams) -> float:
    """Standard deviation of |ψ_s|² for the free Gaussian packet."""
    return sigma0 * math.sqrt(1 + (params.diffusivity * t / (2 * sigma0**2)) ** 2)


def _check_lengths(lam: float, L: float) -> None:
    if not (lam > 0 and L > 0):
        raise DomainError(f"wavelength and aperture must be positive, got λ={lam}, L={L}")

# -*- coding: utf-8 -*-
"""
Rotating-mode algebra of orbiting droplet pairs.

The two rotating modes m = ±1 form a two-level system. A state is a complex
amplitude pair (a₁, a₂) over χ₁ = A e^{iθ}J₁(k_r r) and χ₋₁ = A e^{−iθ}J₋₁(k_r r);
its Bloch angles describe the dipole orientation, and β must advance by 4π
(not 2π) to bring the wave field back to itself.
"""
import math
from enum import Enum
from typing import Callable, Sequence

import numpy as np
from loguru import logger
from numpy.typing import ArrayLike, NDArray
from pydantic import BaseModel, ConfigDict, Field, model_validator
from scipy.stats import linregress

from common.errors import DomainError, RegimeError
from common.params import MediumParams

from .bessel import bessel_j, bessel_j_signed
from .forces import Geometry, Oscillator, pair_force_vector

PAULI_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)

# Far-field fits need k r in the asymptotic Bessel regime.
ASYMPTOTIC_KR = 10.0
NEAR_FIELD_KR = 2.0
_THETA_NODES = 64
_TIME_NODES = 32


class Axis(Enum):
    X = "x"
    Y = "y"
    Z = "z"

    @property
    def matrix(self) -> NDArray[np.complex128]:
        return {Axis.X: PAULI_X, Axis.Y: PAULI_Y, Axis.Z: PAULI_Z}[self]


class BlochAngles(BaseModel):
    """Bloch parameters: global phase S, polar angle beta, relative phase phi."""

    model_config = ConfigDict(frozen=True)

    S: float
    beta: float
    phi: float


class SpinState(BaseModel):
    """
    Amplitudes of the m = +1 (`a1`) and m = −1 (`a2`) rotating modes.

    Raises:
        ValueError: If both amplitudes vanish.
    """

    model_config = ConfigDict(frozen=True)

    a1: complex
    a2: complex

    @model_validator(mode="after")
    def _nonzero(self) -> "SpinState":
        if abs(self.a1) == 0.0 and abs(self.a2) == 0.0:
            raise DomainError("spin state needs a non-zero amplitude")
        return self

    @property
    def amplitudes(self) -> NDArray[np.complex128]:
        return np.array([self.a1, self.a2], dtype=np.complex128)

    @property
    def weight(self) -> float:
        """|a₁|² + |a₂|², proportional to the wave energy."""
        return abs(self.a1) ** 2 + abs(self.a2) ** 2

    @staticmethod
    def from_bloch(S: float, beta: float, phi: float) -> "SpinState":
        """a₁ = e^{iS}cos(β/2), a₂ = e^{iS}e^{iφ}sin(β/2); β may exceed 2π."""
        return SpinState(
            a1=complex(np.exp(1j * S) * math.cos(beta / 2)),
            a2=complex(np.exp(1j * (S + phi)) * math.sin(beta / 2)),
        )

    @staticmethod
    def spin_wave(alpha: float) -> "SpinState":
        """The real family cos(α)h₁ + sin(α)h₋₁."""
        return SpinState(a1=math.cos(alpha), a2=math.sin(alpha))

    def bloch(self) -> BlochAngles:
        """
        Principal Bloch angles, β ∈ [0, π], recovered from the amplitudes.

        When a₁ vanishes the global phase is taken from a₂ with φ = 0.
        """
        m1, m2 = abs(self.a1), abs(self.a2)
        beta = 2.0 * math.atan2(m2, m1)
        if m1 > 0:
            S = math.atan2(self.a1.imag, self.a1.real)
            phi = math.atan2(self.a2.imag, self.a2.real) - S if m2 > 0 else 0.0
        else:
            S = math.atan2(self.a2.imag, self.a2.real)
            phi = 0.0
        return BlochAngles(S=S, beta=beta, phi=_wrap(phi))

    def normalized(self) -> "SpinState":
        norm = math.sqrt(self.weight)
        return SpinState(a1=self.a1 / norm, a2=self.a2 / norm)


class RotatingPair(BaseModel):
    """
    Two droplets orbiting at Ω, seen as counter-rotating m = ±1 waves.

    The co-rotating part travels at ω₀ + Ω (wavenumber k₁), the other at
    ω₀ − Ω (k₂).
    """

    model_config = ConfigDict(frozen=True)

    Omega: float = Field(ge=0)
    k1: float = Field(gt=0)
    k2: float = Field(gt=0)
    h0: float = Field(ge=0)

    @staticmethod
    def orbiting(Omega: float, params: MediumParams, h0: float | None = None) -> "RotatingPair":
        if not 0 <= Omega < params.omega0:
            raise DomainError(f"orbital frequency must lie in [0, ω₀), got {Omega}")
        return RotatingPair(
            Omega=Omega,
            k1=(params.omega0 + Omega) / params.c,
            k2=(params.omega0 - Omega) / params.c,
            h0=params.h0 if h0 is None else h0,
        )


def rotating_pair_height(
    pair: RotatingPair,
    r: ArrayLike,
    theta: ArrayLike,
    t: ArrayLike,
    params: MediumParams,
    factored: bool = False,
) -> ArrayLike:
    """
    Wave height of an orbiting pair.

    Exact form: ½h₀[cos((ω₀+Ω)t − θ)J₁(k₁r) + cos((ω₀−Ω)t + θ)J₁(k₂r)].
    Factored form (small r and Ω): h₀cos(ω₀t)cos(Ωt − θ)J₁(k_r r), a standing
    dipole rotating with the droplets; it vanishes on θ = Ωt ± π/2.
    """
    r = np.asarray(r, dtype=np.float64)
    theta = np.asarray(theta, dtype=np.float64)
    t = np.asarray(t, dtype=np.float64)
    w0, Om = params.omega0, pair.Omega
    if factored:
        return pair.h0 * np.cos(w0 * t) * np.cos(Om * t - theta) * bessel_j(1, params.k_r * r)
    return 0.5 * pair.h0 * (
        np.cos((w0 + Om) * t - theta) * bessel_j(1, pair.k1 * r)
        + np.cos((w0 - Om) * t + theta) * bessel_j(1, pair.k2 * r)
    )


def mode_height(m: int, r: ArrayLike, theta: ArrayLike, t: ArrayLike, params: MediumParams) -> ArrayLike:
    """Real rotating mode hₘ = h₀cos(ω₀t − mθ)Jₘ(k_r r)."""
    radial = bessel_j_signed(m, np.asarray(r, dtype=np.float64) * params.k_r)
    return params.h0 * np.cos(params.omega0 * np.asarray(t) - m * np.asarray(theta)) * radial


def mode_overlap(
    m: int,
    n: int,
    r: float,
    params: MediumParams,
    t: float | None = None,
) -> float:
    """
    ∫₀^{2π} hₘhₙ dθ at radius r.

    With `t=None` the product is also averaged over one bounce period; the
    (m, −m) products only vanish on that average. Both quadratures use
    uniform nodes, which are exact for these trigonometric integrands.
    """
    theta = 2 * math.pi * np.arange(_THETA_NODES) / _THETA_NODES
    if t is None:
        times = params.tau * np.arange(_TIME_NODES) / _TIME_NODES
    else:
        times = np.array([t])
    T, TH = np.meshgrid(times, theta, indexing="ij")
    product = np.asarray(mode_height(m, r, TH, T, params)) * np.asarray(mode_height(n, r, TH, T, params))
    per_time = product.sum(axis=1) * (2 * math.pi / _THETA_NODES)
    return float(per_time.mean())


def angular_momentum(state: SpinState, L0: float) -> float:
    """L = L₀(|a₁|² − |a₂|²)/(|a₁|² + |a₂|²); L₀cos(2α) on the real family."""
    return L0 * (abs(state.a1) ** 2 - abs(state.a2) ** 2) / state.weight


def superposed_field(
    state: SpinState,
    r: ArrayLike,
    theta: ArrayLike,
    t: ArrayLike,
    params: MediumParams,
) -> tuple[ArrayLike, ArrayLike, float]:
    """
    Complex wave ξ = e^{−iω₀t}(a₁χ₁ + a₂χ₋₁), its height Re ξ and the energy proxy.

    χₘ = h₀e^{imθ}Jₘ(k_r r).
    """
    r = np.asarray(r, dtype=np.float64)
    theta = np.asarray(theta, dtype=np.float64)
    kr = params.k_r * r
    chi_plus = params.h0 * np.exp(1j * theta) * bessel_j_signed(1, kr)
    chi_minus = params.h0 * np.exp(-1j * theta) * bessel_j_signed(-1, kr)
    xi = np.exp(-1j * params.omega0 * np.asarray(t)) * (state.a1 * chi_plus + state.a2 * chi_minus)
    return xi, np.real(xi), state.weight


def bloch_roundtrip(state: SpinState) -> tuple[BlochAngles, SpinState]:
    """Bloch angles of `state` and the state rebuilt from them."""
    angles = state.bloch()
    return angles, SpinState.from_bloch(angles.S, angles.beta, angles.phi)


def lift_bloch_path(states: Sequence[SpinState]) -> list[BlochAngles]:
    """
    Bloch angles along a continuous path of states, with β unwrapped.

    Each state admits the equivalent parametrisations
    (S, β + 4πn, φ), (S + π, β + 2π + 4πn, φ), (S, −β + 4πn, φ + π) and
    (S + π, 2π − β + 4πn, φ + π); the one closest to the previous point is
    kept, so β runs past π and 2π and the sign of χ stays observable.
    """
    lifted: list[BlochAngles] = []
    for state in states:
        base = state.bloch()
        if not lifted:
            lifted.append(base)
            continue
        prev = lifted[-1]
        best: BlochAngles | None = None
        best_cost = math.inf
        for S, beta, phi in _equivalents(base, prev.beta):
            cost = abs(beta - prev.beta) + abs(_wrap(S - prev.S))
            if math.sin(beta / 2) ** 2 > 1e-12:
                cost += abs(_wrap(phi - prev.phi))
            if cost < best_cost:
                best, best_cost = BlochAngles(S=prev.S + _wrap(S - prev.S), beta=beta, phi=_wrap(phi)), cost
        assert best is not None
        lifted.append(best)
    return lifted


def spin_projection(state: SpinState, axis: Axis) -> float:
    """σᵢ = (a*·σ̂ᵢa)/(a*·a) for the hard-coded Pauli matrix of `axis`."""
    a = state.amplitudes
    value = np.vdot(a, axis.matrix @ a) / np.vdot(a, a)
    return float(value.real)


def spin_vector(state: SpinState) -> tuple[float, float, float]:
    return (
        spin_projection(state, Axis.X),
        spin_projection(state, Axis.Y),
        spin_projection(state, Axis.Z),
    )


def antisymmetric_pair_field(
    xi_a: Callable[[NDArray[np.float64], NDArray[np.float64], float], ArrayLike],
    d: tuple[float, float],
    at: tuple[ArrayLike, ArrayLike],
    t: float,
    origin: tuple[float, float] = (0.0, 0.0),
) -> ArrayLike:
    """
    ξ = ξ_a(x − origin, t) − ξ_a(x − origin − d, t) for two identical pairs.

    Exchanging the pairs (origin → origin + d, d → −d) negates the field.
    """
    x = np.asarray(at[0], dtype=np.float64) - origin[0]
    y = np.asarray(at[1], dtype=np.float64) - origin[1]
    first = np.asarray(xi_a(x, y, t))
    second = np.asarray(xi_a(x - d[0], y - d[1], t))
    return first - second


def pair_boundary_coupling(v: float, alpha1: float, params: MediumParams) -> float:
    """Coupling α₂ = (v²/c²)α₁ of a pair orbiting at speed v."""
    params.gamma(v)
    return (v / params.c) ** 2 * alpha1


class Circulation(BaseModel):
    """Far-field circulation proxy and its fitted power law."""

    model_config = ConfigDict(frozen=True)

    m: int
    sign: int
    slope: float
    r_squared: float
    radii: list[float]
    transport: list[float]


def far_field_circulation(m: int, r_samples: ArrayLike, params: MediumParams) -> Circulation:
    """
    Cycle- and wavelength-averaged azimuthal transport of mode m versus r.

    The transport proxy is sign(m)·½h₀²ω₀k⟨Jₘ(kρ)²⟩, the average taken over
    one wavelength centred on each radius. Its log–log slope tends to −1,
    the profile of a vortex.

    Raises:
        RegimeError: If any sample has k r < 2.
    """
    radii = np.asarray(r_samples, dtype=np.float64)
    k = params.k_r
    kr_min = float(np.min(k * radii))
    if kr_min < NEAR_FIELD_KR:
        raise RegimeError(f"k r = {kr_min:.2f} is in the near field; the flow is not vortex-like")
    if kr_min < ASYMPTOTIC_KR:
        logger.warning("k r = {kr:.2f} is below the asymptotic range (≥ {lim})", kr=kr_min, lim=ASYMPTOTIC_KR)

    wavelength = 2 * math.pi / k
    offsets = (np.arange(64) + 0.5) / 64 - 0.5
    rho = radii[:, None] + wavelength * offsets[None, :]
    envelope = np.mean(np.asarray(bessel_j_signed(m, k * rho)) ** 2, axis=1)
    transport = 0.5 * params.h0**2 * params.omega0 * k * envelope
    fit = linregress(np.log(radii), np.log(transport))
    sign = int(np.sign(m))
    return Circulation(
        m=m,
        sign=sign,
        slope=float(fit.slope),
        r_squared=float(fit.rvalue**2),
        radii=radii.tolist(),
        transport=(sign * transport).tolist(),
    )


def dipole_droplets(
    center: tuple[float, float],
    orientation: float,
    half_spacing: float,
    Q_amp: float,
    frequency: float,
) -> tuple[Oscillator, Oscillator]:
    """The two antiphase droplets of a pair whose dipole axis points along `orientation`."""
    ux, uy = math.cos(orientation), math.sin(orientation)
    lead = Oscillator(
        position=(center[0] + half_spacing * ux, center[1] + half_spacing * uy),
        Q_amp=Q_amp,
        phase=0.0,
        frequency=frequency,
    )
    trail = Oscillator(
        position=(center[0] - half_spacing * ux, center[1] - half_spacing * uy),
        Q_amp=Q_amp,
        phase=math.pi,
        frequency=frequency,
    )
    return lead, trail


def pair_alignment_torque(
    pair_a: Sequence[Oscillator],
    pair_b: Sequence[Oscillator],
    center_b: tuple[float, float],
    rho0: float,
    geometry: Geometry = Geometry.HEMISPHERE,
) -> float:
    """
    Net z-torque on pair B about its centre from the droplets of pair A.

    Sums `pair_force_vector` over the four droplet-droplet interactions;
    positive values turn B anticlockwise.
    """
    torque = 0.0
    for target in pair_b:
        lever_x = target.position[0] - center_b[0]
        lever_y = target.position[1] - center_b[1]
        for source in pair_a:
            fx, fy = pair_force_vector(target, source, rho0, geometry)
            torque += lever_x * fy - lever_y * fx
    return torque


def _equivalents(base: BlochAngles, near_beta: float) -> list[tuple[float, float, float]]:
    turns = round((near_beta - base.beta) / (4 * math.pi))
    out: list[tuple[float, float, float]] = []
    for n in (turns - 1, turns, turns + 1):
        shift = 4 * math.pi * n
        out.append((base.S, base.beta + shift, base.phi))
        out.append((base.S + math.pi, base.beta + 2 * math.pi + shift, base.phi))
        out.append((base.S, -base.beta + shift, base.phi + math.pi))
        out.append((base.S + math.pi, 2 * math.pi - base.beta + shift, base.phi + math.pi))
    return out


def _wrap(angle: float) -> float:
    """Wrap to (−π, π]."""
    wrapped = math.remainder(angle, 2 * math.pi)
    return math.pi if wrapped == -math.pi else wrapped

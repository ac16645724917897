# -*- coding: utf-8 -*-
"""
Cycle-averaged interaction laws between oscillating sources.

A pulsating source (a bubble, or a droplet pumping air as it bounces) with
volumetric flow Q(t) = Q cos(ωt + φ) drives a radial flow U = −Q/(4πr²).
A second source ingesting fluid from that flow feels a force ρ₀U·Q₂, which
averages over a cycle to an inverse-square law, attractive in phase and
repulsive in antiphase.
"""
import math
from enum import Enum
from typing import Sequence

import numpy as np
from loguru import logger
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict, Field, model_validator

from common.errors import DomainError, SingularityError
from common.params import MediumParams

from .wavefield import Point

# Above this the small-amplitude expansion behind α = 3A²(r₀ω/c)³ is stretched.
SMALL_AMPLITUDE_LIMIT = 0.3


class Geometry(Enum):
    FULL_SPHERE = "full-sphere"
    # Flow confined above the bath surface: speed doubles for the same Q.
    HEMISPHERE = "hemisphere"

    @property
    def solid_angle_factor(self) -> float:
        return 2.0 if self is Geometry.HEMISPHERE else 1.0


class Oscillator(BaseModel):
    """
    A pulsating source with sinusoidal volumetric flow.

    Attributes:
        position (Point): Centre (mm).
        Q_amp (float): Peak volumetric flow (mm³/s).
        phase (float): Flow phase (rad).
        frequency (float): Angular frequency (rad/s).
        moving_velocity (Point): Drift velocity (mm/s).
    """

    model_config = ConfigDict(frozen=True)

    position: Point = (0.0, 0.0)
    Q_amp: float = Field(default=0.0, ge=0)
    phase: float = 0.0
    frequency: float = Field(default=2 * math.pi * 25.0, gt=0)
    moving_velocity: Point = (0.0, 0.0)


class ForceConstants(BaseModel):
    """
    Conventional constants of the inverse-square law F = αƀc/r².

    Attributes:
        alpha (float): Dimensionless coupling (fine-structure analogue).
        bbar (float): Action constant ƀ = m c²/ω (g·mm²/s).
        m_eff (float): Inertial mass (g).
        omega (float): Oscillation angular frequency (rad/s).
        c (float): Wave speed the constants were defined with (mm/s).
    """

    model_config = ConfigDict(frozen=True)

    alpha: float = Field(ge=0)
    bbar: float = Field(gt=0)
    m_eff: float = Field(gt=0)
    omega: float = Field(gt=0)
    c: float = Field(gt=0)

    @model_validator(mode="after")
    def _check_bbar(self) -> "ForceConstants":
        expected = self.m_eff * self.c**2 / self.omega
        if abs(self.bbar - expected) > 1e-12 * expected:
            raise ValueError(f"bbar {self.bbar} must equal m c²/ω = {expected}")
        return self

    @staticmethod
    def for_mass(alpha: float, m_eff: float, omega: float, c: float) -> "ForceConstants":
        return ForceConstants(
            alpha=alpha, bbar=m_eff * c * c / omega, m_eff=m_eff, omega=omega, c=c
        )


def radial_flow_speed(Q: float, r: float, geometry: Geometry = Geometry.FULL_SPHERE) -> float:
    """
    Radial speed U (mm/s) at distance r from a source of flow Q.

    U = −Q/(4πr²) for a full sphere, doubled for a hemisphere.

    Raises:
        SingularityError: If r is zero.
    """
    _check_distance(r)
    return -geometry.solid_angle_factor * Q / (4 * math.pi * r * r)


def pair_force(
    a: Oscillator,
    b: Oscillator,
    rho0: float,
    r: float,
    geometry: Geometry = Geometry.FULL_SPHERE,
) -> float:
    """
    Cycle-averaged radial force between two oscillators, positive = attraction.

    F = ρ₀Q₁Q₂cos(Δφ)/(8πr²), doubled for the hemispherical geometry.

    Raises:
        SingularityError: If r is zero.
        DomainError: If the oscillators run at different frequencies.
    """
    _check_distance(r)
    if not math.isclose(a.frequency, b.frequency, rel_tol=1e-12):
        raise DomainError("pair_force needs equal frequencies; beats average to zero")
    coupling = math.cos(a.phase - b.phase)
    return geometry.solid_angle_factor * rho0 * a.Q_amp * b.Q_amp * coupling / (8 * math.pi * r * r)


def pair_force_vector(
    a: Oscillator,
    b: Oscillator,
    rho0: float,
    geometry: Geometry = Geometry.FULL_SPHERE,
) -> tuple[float, float]:
    """Force on `a` due to `b` as a 2D vector (attraction points from a to b)."""
    dx = b.position[0] - a.position[0]
    dy = b.position[1] - a.position[1]
    r = math.hypot(dx, dy)
    magnitude = pair_force(a, b, rho0, r, geometry)
    return magnitude * dx / r, magnitude * dy / r


def droplet_flow_rate(V: float, f: float, beta: float) -> float:
    """Air flow Q = βfV (mm³/s) pumped by a droplet of volume V bouncing at f Hz."""
    if V < 0 or f < 0 or beta < 0:
        raise DomainError("droplet volume, frequency and beta must be non-negative")
    return beta * f * V


def droplet_acceleration(V: float, f: float, beta: float, r: float) -> float:
    """
    Acceleration Vβ²f²/(4πr²) of a droplet at distance r from its antiphase twin.

    Both droplets pump Q = βfV through the hemisphere above the bath.
    """
    _check_distance(r)
    return V * beta * beta * f * f / (4 * math.pi * r * r)


def bubble_flow_amplitude(A: float, r0: float, omega: float) -> float:
    """Peak flow 4πr₀³Aω of a bubble whose radius oscillates as r₀(1 + A sin ωt)."""
    return 4 * math.pi * r0**3 * A * omega


def conventional_constants(A: float, r0: float, omega: float, params: MediumParams) -> ForceConstants:
    """
    Constants (α, ƀ) of a small-amplitude pulsating bubble.

    α = 3A²(r₀ω/c)³ and ƀ = m c²/ω with the added mass m = ½ρ₀(4π/3)r₀³, so
    that αƀc/r² reproduces the full-sphere `pair_force` of two such bubbles.
    """
    if A < 0 or r0 <= 0 or omega <= 0:
        raise DomainError("need A ≥ 0, r0 > 0 and omega > 0")
    if A > SMALL_AMPLITUDE_LIMIT:
        logger.warning("Oscillation amplitude A = {A} is beyond the small-A range", A=A)
    m_eff = 0.5 * params.rho0 * (4 * math.pi / 3) * r0**3
    alpha = 3 * A * A * (r0 * omega / params.c) ** 3
    return ForceConstants.for_mass(alpha, m_eff, omega, params.c)


def inverse_square_force(consts: ForceConstants, r: float) -> float:
    """F = αƀc/r² (positive = attraction between in-phase sources)."""
    _check_distance(r)
    return consts.alpha * consts.bbar * consts.c / (r * r)


def magnetic_factor(v: float, params: MediumParams) -> float:
    """Reduction 1 − v²/c² of the force between sources moving in parallel at v."""
    params.gamma(v)
    return 1.0 - (v / params.c) ** 2


def speed_from_slope_ratio(ratio: float) -> float:
    """v/c from an observed force-reduction ratio, inverting `magnetic_factor`."""
    if not 0.0 < ratio <= 1.0:
        raise DomainError(f"slope ratio must lie in (0, 1], got {ratio}")
    return math.sqrt(1.0 - ratio)


def flow_potential(
    oscillators: Sequence[Oscillator],
    points: NDArray[np.float64],
    heights: NDArray[np.float64] | float = 0.0,
) -> NDArray[np.float64]:
    """
    Velocity potential of the cycle-averaged source strengths at 3D points.

    Sources sit on the plane z = 0 with strength Q·cos(phase); `points` holds
    (x, y) pairs in its last axis and `heights` their z.
    """
    pts = np.asarray(points, dtype=np.float64)
    z = np.asarray(heights, dtype=np.float64)
    phi = np.zeros(pts.shape[:-1])
    for osc in oscillators:
        dx = pts[..., 0] - osc.position[0]
        dy = pts[..., 1] - osc.position[1]
        dist = np.sqrt(dx * dx + dy * dy + z * z)
        if np.any(dist == 0.0):
            raise SingularityError("potential evaluated on a source")
        phi = phi + osc.Q_amp * math.cos(osc.phase) / (4 * math.pi * dist)
    return phi


def laplace_residual(
    oscillators: Sequence[Oscillator],
    lower: tuple[float, float, float],
    upper: tuple[float, float, float],
    spacing: float,
) -> float:
    """
    RMS of the 7-point discrete Laplacian of `flow_potential` in a box.

    Away from the sources the potential is harmonic, so the residual falls
    at second order under refinement.
    """
    if spacing <= 0:
        raise DomainError(f"spacing must be positive, got {spacing}")
    axes = [lo + spacing * np.arange(int(round((hi - lo) / spacing)) + 1) for lo, hi in zip(lower, upper)]
    if any(len(axis) < 3 for axis in axes):
        raise DomainError("box holds fewer than 3 samples per axis")
    X, Y, Z = np.meshgrid(*axes, indexing="ij")
    phi = flow_potential(oscillators, np.stack([X, Y], axis=-1), Z)
    core = phi[1:-1, 1:-1, 1:-1]
    lap = (
        phi[2:, 1:-1, 1:-1]
        + phi[:-2, 1:-1, 1:-1]
        + phi[1:-1, 2:, 1:-1]
        + phi[1:-1, :-2, 1:-1]
        + phi[1:-1, 1:-1, 2:]
        + phi[1:-1, 1:-1, :-2]
        - 6.0 * core
    ) / spacing**2
    return float(np.sqrt(np.mean(lap * lap)))


def _check_distance(r: float) -> None:
    if r == 0.0:
        raise SingularityError("inverse-square law evaluated at r = 0")
    if r < 0 or not math.isfinite(r):
        raise DomainError(f"distance must be positive and finite, got {r}")

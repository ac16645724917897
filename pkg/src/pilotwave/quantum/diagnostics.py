# -*- coding: utf-8 -*-
"""Finite-difference residuals used to verify evolutions and exact solutions."""
import math
from typing import Sequence

import numpy as np
from loguru import logger
from numpy.typing import NDArray

from common.errors import DomainError

from .field import ComplexField
from .pilot import PilotWaveParams


def laplacian(samples: NDArray[np.complex128], dx: float) -> NDArray[np.complex128]:
    """2d+1 point Laplacian on the interior (one sample trimmed from each edge)."""
    if samples.ndim == 1:
        return (samples[2:] - 2 * samples[1:-1] + samples[:-2]) / dx**2
    centre = samples[1:-1, 1:-1]
    return (
        samples[2:, 1:-1] + samples[:-2, 1:-1] + samples[1:-1, 2:] + samples[1:-1, :-2] - 4 * centre
    ) / dx**2


def interior(samples: NDArray) -> NDArray:
    return samples[1:-1] if samples.ndim == 1 else samples[1:-1, 1:-1]


def klein_gordon_residual(history: Sequence[ComplexField], params: PilotWaveParams) -> float:
    """
    RMS over the interior of ψ_tt − c²∇²ψ + ω₀²ψ at the middle of three levels.

    `history` holds the full oscillating field ψ (not ψ_s) at three
    consecutive, equally spaced times. The residual is second order in dx
    and dt for exact solutions cos(kx − ωt) with ω² = ω₀² + c²k².
    """
    before, now, after = _three_levels(history)
    dt = now.dt
    psi_tt = (after.samples - 2 * now.samples + before.samples) / dt**2
    residual = interior(psi_tt) - params.c**2 * laplacian(now.samples, now.dx) + params.omega0**2 * interior(now.samples)
    return _rms(residual)


def continuity_residual(a: ComplexField, b: ComplexField, params: PilotWaveParams) -> float:
    """
    RMS of ∂|ψ_s|²/∂t + ∇·j with j = (ƀ/m₀)Im(ψ̄_s∇ψ_s), centred between `a` and `b`.

    ∇·j reduces to (ƀ/m₀)Im(ψ̄_s∇²ψ_s), evaluated on the mid-level field.
    """
    _check_pair(a, b)
    dt = b.t - a.t if b.t != a.t else a.dt
    rho_t = (b.density() - a.density()) / dt
    mid = 0.5 * (a.samples + b.samples)
    divergence = params.diffusivity * np.imag(np.conj(interior(mid)) * laplacian(mid, a.dx))
    return _rms(interior(rho_t) + divergence)


def phase_rotation_rate(history: Sequence[ComplexField], params: PilotWaveParams) -> float:
    """
    ω₀ + dθ/dt at the density maximum of the middle level.

    For an eigenstate of a static V this is the local bounce frequency
    (m₀c² − V)/ƀ.
    """
    before, now, after = _three_levels(history)
    peak = np.unravel_index(np.argmax(now.density()), now.samples.shape)
    # branch-cut safe: angle of ψ(t+dt)·conj(ψ(t−dt))
    dtheta = float(np.angle(after.samples[peak] * np.conj(before.samples[peak])))
    return params.omega0 + dtheta / (after.t - before.t if after.t != before.t else 2 * now.dt)


def dropped_term_ratio(history: Sequence[ComplexField], params: PilotWaveParams) -> float:
    """
    ‖∂²ψ_s/∂t²‖ / ‖2ω₀∂ψ_s/∂t‖ over three levels.

    Measures the term the Schrödinger reduction neglects; small when the
    packet moves slowly compared to c.
    """
    before, now, after = _three_levels(history)
    dt = now.dt
    psi_tt = (after.samples - 2 * now.samples + before.samples) / dt**2
    psi_t = (after.samples - before.samples) / (2 * dt)
    denominator = _rms(2 * params.omega0 * psi_t)
    if denominator == 0:
        return 0.0
    ratio = _rms(psi_tt) / denominator
    logger.debug("dropped ψ_tt term is {ratio:.3e} of 2ω₀ψ_t", ratio=ratio)
    return ratio


def _three_levels(history: Sequence[ComplexField]) -> tuple[ComplexField, ComplexField, ComplexField]:
    if len(history) != 3:
        raise DomainError(f"need three consecutive time levels, got {len(history)}")
    before, now, after = history
    _check_pair(before, now)
    _check_pair(now, after)
    return before, now, after


def _check_pair(a: ComplexField, b: ComplexField) -> None:
    if a.samples.shape != b.samples.shape or not math.isclose(a.dx, b.dx):
        raise DomainError("time levels must share one grid")


def _rms(values: NDArray) -> float:
    return float(np.sqrt(np.mean(np.abs(values) ** 2)))

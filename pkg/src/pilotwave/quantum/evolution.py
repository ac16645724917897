# -*- coding: utf-8 -*-
"""
Time stepping of iƀ∂ψ_s/∂t = (−ƀ²/(2m₀)∇² + V)ψ_s.

Periodic grids use the Strang split-operator scheme (exact kinetic phase in
Fourier space). Reflecting and absorbing grids use Crank–Nicolson with
Dirichlet walls; absorbing grids add a smooth −iW sponge along every edge.
"""
import math
from abc import ABC, abstractmethod
from typing import Callable, Optional

import numpy as np
import scipy.sparse as sp
from loguru import logger
from numpy.typing import NDArray
from scipy.sparse.linalg import splu

from common.errors import DomainError, IntegrationError

from .field import Boundary, ComplexField
from .pilot import PilotWaveParams

# Fraction of each axis covered by the absorbing sponge.
DEFAULT_SPONGE_FRACTION = 0.1
# Peak sponge rate in units of the kinetic rate ƀ/(2m₀)·(2π/thickness)².
DEFAULT_SPONGE_STRENGTH = 20.0

StepCallback = Callable[[int, ComplexField], None]


def max_stable_dt(dx: float, ndim: int, params: PilotWaveParams) -> float:
    """Largest dt with dt·ƀk²max/(2m₀) ≤ π, where k²max = d(π/dx)²."""
    k2max = ndim * (math.pi / dx) ** 2
    return 2 * math.pi / (params.diffusivity * k2max)


class Stepper(ABC):
    """
    Contract for a one-step propagator bound to a grid and a potential.

    Building a stepper is the expensive part (potential sampling, sparse
    factorisation); reuse one for every step of a run.
    """

    def __init__(self, template: ComplexField, params: PilotWaveParams):
        limit = max_stable_dt(template.dx, template.ndim, params)
        if template.dt > limit:
            raise IntegrationError(
                f"dt = {template.dt:g} exceeds the stability bound {limit:g} for dx = {template.dx:g}"
            )
        self.shape = template.samples.shape
        self.dx = template.dx
        self.dt = template.dt
        self.params = params
        self.potential = params.potential_on(*template.coords())

    @abstractmethod
    def advance(self, samples: NDArray[np.complex128]) -> NDArray[np.complex128]:
        """Samples one dt later."""
        raise NotImplementedError()

    def step(self, psi: ComplexField) -> ComplexField:
        if psi.samples.shape != self.shape or psi.dx != self.dx or psi.dt != self.dt:
            raise DomainError("field does not match the grid this stepper was built for")
        return psi.with_samples(self.advance(psi.samples), t=psi.t + psi.dt)


class SplitOperatorStepper(Stepper):
    """Strang splitting: half potential kick, exact kinetic drift, half kick."""

    def __init__(self, template: ComplexField, params: PilotWaveParams):
        super().__init__(template, params)
        ks = [2 * math.pi * np.fft.fftfreq(n, d=template.dx) for n in self.shape]
        k2 = sum(np.meshgrid(*[k**2 for k in ks], indexing="ij")) if len(ks) > 1 else ks[0] ** 2
        self._drift = np.exp(-0.5j * params.diffusivity * k2 * self.dt)
        self._kick = np.exp(-0.5j * self.potential * self.dt / params.bbar)

    def advance(self, samples: NDArray[np.complex128]) -> NDArray[np.complex128]:
        half = self._kick * samples
        drifted = np.fft.ifftn(self._drift * np.fft.fftn(half))
        return self._kick * drifted


class CrankNicolsonStepper(Stepper):
    """
    (1 + i dt H/2ƀ)ψⁿ⁺¹ = (1 − i dt H/2ƀ)ψⁿ with a 2d+1 point Laplacian.

    Samples outside the grid are held at zero (hard walls). With
    `sponge=True`, H gains −iW where W ramps quadratically from zero to its
    peak across the outer `sponge_fraction` of each axis.
    """

    def __init__(
        self,
        template: ComplexField,
        params: PilotWaveParams,
        sponge: bool = False,
        sponge_fraction: float = DEFAULT_SPONGE_FRACTION,
        sponge_strength: float = DEFAULT_SPONGE_STRENGTH,
    ):
        super().__init__(template, params)
        size = int(np.prod(self.shape))
        kinetic = -0.5 * params.diffusivity * dirichlet_laplacian(self.shape, self.dx)
        rate = self.potential / params.bbar
        if sponge:
            rate = rate - 1j * sponge_profile(template, sponge_fraction, sponge_strength, params)
        hamiltonian = (kinetic + sp.diags(np.ravel(rate))).astype(np.complex128)
        identity = sp.identity(size, dtype=np.complex128, format="csc")
        half = 0.5j * self.dt * hamiltonian
        self._explicit = (identity - half).tocsr()
        self._implicit = splu((identity + half).tocsc())

    def advance(self, samples: NDArray[np.complex128]) -> NDArray[np.complex128]:
        rhs = self._explicit @ np.ravel(samples)
        return self._implicit.solve(rhs).reshape(self.shape)


def sponge_profile(
    template: ComplexField,
    fraction: float,
    strength: float,
    params: PilotWaveParams,
    thickness: Optional[float] = None,
) -> NDArray[np.float64]:
    """
    Absorption rate W/ƀ on the grid: zero inside, quadratic ramp at the edges.

    The ramp covers `fraction` of each axis, or a fixed `thickness` (same
    units as dx) on every axis when one is given.
    """
    if thickness is None and not 0 < fraction < 0.5:
        raise DomainError(f"sponge fraction must lie in (0, 0.5), got {fraction}")
    profile = np.zeros(template.samples.shape)
    for axis, (lower, n) in enumerate(zip(template.origin, template.samples.shape)):
        x = lower + template.dx * np.arange(n)
        upper = x[-1]
        ramp = fraction * (upper - lower) if thickness is None else thickness
        if not 0 < ramp < 0.5 * (upper - lower):
            raise DomainError(f"sponge thickness {ramp:g} does not fit an axis of length {upper - lower:g}")
        depth = np.maximum(np.maximum(lower + ramp - x, x - (upper - ramp)), 0.0) / ramp
        peak = strength * 0.5 * params.diffusivity * (2 * math.pi / ramp) ** 2
        shape = [1] * template.ndim
        shape[axis] = n
        profile = np.maximum(profile, (peak * depth**2).reshape(shape))
    return profile


def make_stepper(template: ComplexField, params: PilotWaveParams, **kwargs) -> Stepper:
    """The stepper matching the field's boundary."""
    if template.boundary is Boundary.PERIODIC:
        return SplitOperatorStepper(template, params)
    if template.boundary is Boundary.REFLECTING:
        return CrankNicolsonStepper(template, params)
    return CrankNicolsonStepper(template, params, sponge=True, **kwargs)


def schrodinger_step(psi: ComplexField, params: PilotWaveParams) -> ComplexField:
    """
    Advance ψ_s by one dt.

    Builds a throwaway stepper; use `evolve` or `make_stepper` for long runs.

    Raises:
        IntegrationError: If dt violates the stability bound.
    """
    return make_stepper(psi, params).step(psi)


def evolve(
    psi: ComplexField,
    params: PilotWaveParams,
    steps: int,
    callback: Optional[StepCallback] = None,
    stepper: Optional[Stepper] = None,
) -> ComplexField:
    """
    Advance `steps` times, calling `callback(i, field)` after each step.

    Args:
        psi (ComplexField): Initial field.
        params (PilotWaveParams): Constants and potential.
        steps (int): Number of steps, ≥ 0.
        callback (Optional[StepCallback]): Observer for snapshots and
            trajectory integration; step numbers start at 1.
        stepper (Optional[Stepper]): A prebuilt stepper for this grid.
    """
    if steps < 0:
        raise DomainError(f"steps must be non-negative, got {steps}")
    stepper = stepper or make_stepper(psi, params)
    start_norm = psi.norm()
    for i in range(1, steps + 1):
        psi = stepper.step(psi)
        if callback is not None:
            callback(i, psi)
    if psi.boundary is not Boundary.ABSORBING and start_norm > 0:
        drift = abs(psi.norm() - start_norm) / start_norm
        logger.debug("evolved {steps} steps, relative norm drift {drift:.3e}", steps=steps, drift=drift)
    return psi


def galilean_boost(psi: ComplexField, v: float, params: PilotWaveParams) -> ComplexField:
    """
    The field seen from a frame moving at −v along x.

    ψ'(x) = ψ(x − vt)·exp(i(k_v x − k_v v t/2)) with k_v = v/(ƀ/m₀); the shift
    is applied in Fourier space, so the grid is treated as periodic.
    """
    k_v = v / params.diffusivity
    shift = v * psi.t
    samples = psi.samples
    if shift != 0.0:
        k = 2 * math.pi * np.fft.fftfreq(psi.samples.shape[0], d=psi.dx)
        phase = np.exp(-1j * k * shift).reshape((-1,) + (1,) * (psi.ndim - 1))
        samples = np.fft.ifft(phase * np.fft.fft(samples, axis=0), axis=0)
    x = psi.coords()[0]
    return psi.with_samples(samples * np.exp(1j * (k_v * x - 0.5 * k_v * v * psi.t)))


def dirichlet_laplacian(shape: tuple[int, ...], dx: float) -> sp.csr_matrix:
    """2d+1 point Laplacian on a C-ordered grid with zero samples beyond the edges."""

    def second_difference(n: int) -> sp.csr_matrix:
        return sp.diags([1.0, -2.0, 1.0], [-1, 0, 1], shape=(n, n), format="csr") / dx**2

    if len(shape) == 1:
        return second_difference(shape[0])
    nx, ny = shape
    return (
        sp.kron(second_difference(nx), sp.identity(ny)) + sp.kron(sp.identity(nx), second_difference(ny))
    ).tocsr()

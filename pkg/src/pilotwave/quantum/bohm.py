# -*- coding: utf-8 -*-
"""
Guidance of droplets by the phase of ψ_s: v = (c²/ω₀)∇θ.

Phase gradients use angle(ψᵢ₊₁ψ̄ᵢ₋₁)/(2dx), which never crosses the branch
cut of arg. Velocities are undefined where |ψ_s| vanishes.
"""
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy.interpolate import RegularGridInterpolator

from common.errors import DomainError, NodeError
from common.rng import Stream, uniform_draws

from .evolution import Stepper, make_stepper
from .field import ComplexField
from .pilot import PilotWaveParams

# Relative to the field maximum.
NODE_EPSILON = 1e-8


def phase_gradient(psi: ComplexField) -> tuple[NDArray[np.float64], ...]:
    """
    ∇θ on every node; one-sided at the edges.

    Where a neighbour is exactly zero (a wall node) the centred difference
    carries no phase, so the one-sided difference to the other neighbour is
    used instead.
    """
    grads = []
    for axis in range(psi.ndim):
        s = np.moveaxis(psi.samples, axis, 0)
        g = np.empty(s.shape)
        centred = s[2:] * np.conj(s[:-2])
        forward = s[2:] * np.conj(s[1:-1])
        backward = s[1:-1] * np.conj(s[:-2])
        one_sided = np.where(forward != 0, np.angle(forward), np.angle(backward)) / psi.dx
        g[1:-1] = np.where(centred != 0, np.angle(centred) / (2 * psi.dx), one_sided)
        g[0] = np.angle(s[1] * np.conj(s[0])) / psi.dx
        g[-1] = np.angle(s[-1] * np.conj(s[-2])) / psi.dx
        grads.append(np.moveaxis(g, 0, axis))
    return tuple(grads)


class GuidanceField:
    """
    Guidance velocities of one frozen field, interpolated at arbitrary points.

    Phase gradients and interpolators are built once, so stepping many
    droplets through a stationary field costs only the lookups.
    """

    def __init__(self, psi: ComplexField, params: PilotWaveParams):
        self.psi = psi
        self.axes = psi.axes()
        self.lower = np.array([ax[0] for ax in self.axes])
        self.upper = np.array([ax[-1] for ax in self.axes])
        magnitude = np.abs(psi.samples)
        self._floor = NODE_EPSILON * magnitude.max()
        self._scale = params.diffusivity
        grads = phase_gradient(psi)
        if psi.ndim == 1:
            self._magnitude = lambda p: np.interp(p[:, 0], self.axes[0], magnitude)
            self._grads = [lambda p, g=grads[0]: np.interp(p[:, 0], self.axes[0], g)]
        else:
            self._magnitude = RegularGridInterpolator(self.axes, magnitude)
            self._grads = [RegularGridInterpolator(self.axes, g) for g in grads]

    def contains(self, points: NDArray[np.float64]) -> NDArray[np.bool_]:
        return np.all((points >= self.lower) & (points <= self.upper), axis=1)

    def velocities(self, points: NDArray[np.float64]) -> tuple[NDArray[np.float64], NDArray[np.bool_]]:
        """
        Velocities, shape (n, d), and the mask of points at nodes.

        Raises:
            DomainError: If a point lies outside the grid.
        """
        if points.shape[1] != self.psi.ndim:
            raise DomainError(f"positions must have {self.psi.ndim} coordinates")
        if not np.all(self.contains(points)):
            raise DomainError("guidance requested outside the grid")
        local = self._magnitude(points)
        velocity = self._scale * np.stack([g(points) for g in self._grads], axis=1)
        return velocity, local <= self._floor


def bohm_velocities(
    psi: ComplexField,
    positions: ArrayLike,
    params: PilotWaveParams,
) -> tuple[NDArray[np.float64], NDArray[np.bool_]]:
    """
    Guidance velocities at many points, shape (n, d), and a node mask.

    Rows flagged in the mask sit where |ψ_s| ≤ 1e-8·max|ψ_s|; their
    velocities are meaningless.

    Raises:
        DomainError: If a point lies outside the grid.
    """
    points = np.atleast_2d(np.asarray(positions, dtype=np.float64))
    if psi.ndim == 1 and points.shape[0] == 1 and points.shape[1] != 1:
        points = points.T
    return GuidanceField(psi, params).velocities(points)


def bohm_velocity(psi: ComplexField, at: float | tuple[float, ...], params: PilotWaveParams) -> tuple[float, ...]:
    """
    v = (c²/ω₀)∇θ at one point, linearly (bilinearly) interpolated.

    Raises:
        NodeError: If |ψ_s| ≤ 1e-8·max|ψ_s| at the point.
    """
    point = np.atleast_1d(np.asarray(at, dtype=np.float64))[None, :]
    velocity, nodes = bohm_velocities(psi, point, params)
    if nodes[0]:
        raise NodeError(f"ψ_s vanishes at {tuple(point[0])}; the guidance velocity is undefined")
    return tuple(float(v) for v in velocity[0])


def sample_density(psi: ComplexField, seed: int, count: int, stream: Stream = Stream.BOHM_STARTS) -> NDArray[np.float64]:
    """
    `count` points drawn from |ψ_s|², shape (count, d).

    The density is taken as constant over each grid cell; a cell is chosen by
    inverting the cumulative sum, then a point uniformly inside it.
    """
    if count <= 0:
        raise DomainError(f"count must be positive, got {count}")
    density = psi.density().ravel()
    total = density.sum()
    if total <= 0:
        raise DomainError("cannot sample from a field with zero density")
    cdf = np.cumsum(density) / total
    draws = uniform_draws(seed, stream, count, psi.ndim + 1)
    cells = np.minimum(np.searchsorted(cdf, draws[:, 0], side="right"), density.size - 1)
    index = np.stack(np.unravel_index(cells, psi.samples.shape), axis=1)
    origin = np.asarray(psi.origin)
    points = origin + psi.dx * (index + draws[:, 1:] - 0.5)
    lower = origin
    upper = origin + psi.dx * (np.asarray(psi.samples.shape) - 1)
    return np.clip(points, lower, upper)


@dataclass
class BohmTrajectory:
    positions: NDArray[np.float64]
    seed: int
    weight: float


@dataclass
class BohmEnsemble:
    """
    Droplets started from |ψ_s|² and carried by the guidance law.

    Steps use Heun's method through the field at t and t + dt. A droplet
    that lands on a node keeps its previous velocity for that step.
    """

    positions: NDArray[np.float64]
    seed: int
    weights: NDArray[np.float64]
    velocities: NDArray[np.float64]
    record: bool = False
    history: list[NDArray[np.float64]] = field(default_factory=list)

    @staticmethod
    def sample(
        psi: ComplexField,
        params: PilotWaveParams,
        count: int,
        seed: int,
        record: bool = False,
    ) -> "BohmEnsemble":
        positions = sample_density(psi, seed, count)
        weights = _density_at(psi, positions)
        velocities, nodes = bohm_velocities(psi, positions, params)
        velocities[nodes] = 0.0
        ensemble = BohmEnsemble(
            positions=positions,
            seed=seed,
            weights=weights,
            velocities=velocities,
            record=record,
        )
        if record:
            ensemble.history.append(positions.copy())
        return ensemble

    def advance(self, before: ComplexField, after: ComplexField, params: PilotWaveParams) -> None:
        dt = after.t - before.t if after.t != before.t else before.dt
        v1, nodes1 = bohm_velocities(before, self.positions, params)
        v1[nodes1] = self.velocities[nodes1]
        predicted = _clip_to_grid(after, self.positions + dt * v1)
        v2, nodes2 = bohm_velocities(after, predicted, params)
        v2[nodes2] = v1[nodes2]
        self.velocities = 0.5 * (v1 + v2)
        self.positions = _clip_to_grid(after, self.positions + dt * self.velocities)
        if self.record:
            self.history.append(self.positions.copy())

    def follow(
        self,
        psi: ComplexField,
        params: PilotWaveParams,
        steps: int,
        stepper: Optional[Stepper] = None,
    ) -> ComplexField:
        """Evolve the field `steps` times, carrying the ensemble along; returns the final field."""
        stepper = stepper or make_stepper(psi, params)
        for _ in range(steps):
            nxt = stepper.step(psi)
            self.advance(psi, nxt, params)
            psi = nxt
        return psi

    def trajectory(self, index: int) -> BohmTrajectory:
        if not self.record:
            raise DomainError("trajectories are only kept when the ensemble records history")
        path = np.stack([step[index] for step in self.history])
        return BohmTrajectory(positions=path, seed=self.seed, weight=float(self.weights[index]))


def _density_at(psi: ComplexField, points: NDArray[np.float64]) -> NDArray[np.float64]:
    if psi.ndim == 1:
        return np.interp(points[:, 0], psi.axes()[0], psi.density())
    return RegularGridInterpolator(psi.axes(), psi.density())(points)


def _clip_to_grid(psi: ComplexField, points: NDArray[np.float64]) -> NDArray[np.float64]:
    origin = np.asarray(psi.origin)
    upper = origin + psi.dx * (np.asarray(psi.samples.shape) - 1)
    return np.clip(points, origin, upper)

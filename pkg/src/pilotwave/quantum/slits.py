# -*- coding: utf-8 -*-
"""
Droplets crossing one or two slits, guided by the diffracted wave.

The barrier is the row y = 0 of a square grid; droplets arrive from −y.
Each bounce deposits a fresh source on the incoming side, and everything
already on the bath is propagated one bounce period τ = 2π/ω₀ and damped by
exp(−1/M), M being the path memory. The field left after many bounces is the
memory sum Σ qⁿUⁿs over the one-bounce propagator U, which one sparse solve
gives directly. Droplets start uniformly across the apertures and follow the
phase gradient of that field at constant speed until they reach the far
field, where their exit angle is recorded.
"""
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
import scipy.sparse as sp
from loguru import logger
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict, Field, model_validator
from scipy.sparse.linalg import splu

from common.errors import DomainError
from common.rng import Stream, uniform_draws

from .bohm import GuidanceField
from .evolution import DEFAULT_SPONGE_STRENGTH, dirichlet_laplacian, sponge_profile
from .field import Boundary, ComplexField
from .pilot import PilotWaveParams, SlitKind

# Far field in units of the Fraunhofer distance a²/λ, and never nearer than 10λ.
FAR_FIELD_FACTOR = 3.0
FAR_FIELD_WAVELENGTHS = 10.0
# Absorbing layer on every edge of the grid, in wavelengths.
SPONGE_WAVELENGTHS = 3.0
# Incoming sources sit this many wavelengths in front of the barrier.
SOURCE_WAVELENGTHS = 2.0
DEFAULT_MEMORY = 1.0e5
DEFAULT_POINTS_PER_WAVELENGTH = 8


class SlitGeometry(BaseModel):
    """
    Attributes:
        kind (SlitKind): One or two apertures.
        wavelength (float): Pilot-wave wavelength λ (mm).
        width (float): Aperture width L (mm).
        separation (float): Centre-to-centre spacing d of the two apertures
            (mm); ignored for a single slit.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: SlitKind
    wavelength: float = Field(gt=0)
    width: float = Field(gt=0)
    separation: float = Field(default=0.0, ge=0)

    @model_validator(mode="after")
    def _apertures_apart(self) -> "SlitGeometry":
        if self.kind is SlitKind.DOUBLE and self.separation <= self.width:
            raise ValueError("double slits must be separated by more than their width")
        return self

    @property
    def centres(self) -> list[float]:
        if self.kind is SlitKind.SINGLE:
            return [0.0]
        return [-0.5 * self.separation, 0.5 * self.separation]

    @property
    def extent(self) -> float:
        """Overall aperture size a, which sets the Fraunhofer distance."""
        if self.kind is SlitKind.SINGLE:
            return self.width
        return self.separation + self.width

    @property
    def far_field_radius(self) -> float:
        return max(FAR_FIELD_FACTOR * self.extent**2 / self.wavelength, FAR_FIELD_WAVELENGTHS * self.wavelength)


@dataclass(frozen=True)
class SlitRun:
    """Exit angles of the droplets that reached the far field, and the field that guided them."""

    angles: NDArray[np.float64]
    lost: int
    radius: float
    field: ComplexField


def _axis(lower: float, upper: float, dx: float) -> NDArray[np.float64]:
    """Nodes on multiples of dx covering [lower, upper], so 0 is always a node."""
    return dx * np.arange(math.floor(lower / dx), math.ceil(upper / dx) + 1)


def aperture_mask(geometry: SlitGeometry, x: NDArray[np.float64], dx: float) -> NDArray[np.bool_]:
    """
    Open nodes of the barrier row.

    Each aperture edge snaps to its nearest node, which becomes a wall node;
    the nodes strictly between the two edges are open.

    Raises:
        DomainError: If an aperture has no open node at this resolution.
    """
    index = np.rint(x / dx).astype(int)
    open_nodes = np.zeros(x.shape, dtype=bool)
    for centre in geometry.centres:
        left = int(round((centre - 0.5 * geometry.width) / dx))
        right = int(round((centre + 0.5 * geometry.width) / dx))
        inside = (index > left) & (index < right)
        if not inside.any():
            raise DomainError(
                f"aperture of width {geometry.width:g} mm at {centre:g} mm is narrower than the grid step {dx:g} mm"
            )
        open_nodes |= inside
    return open_nodes


def diffracted_field(
    geometry: SlitGeometry,
    params: PilotWaveParams,
    memory: float = DEFAULT_MEMORY,
    points_per_wavelength: int = DEFAULT_POINTS_PER_WAVELENGTH,
) -> ComplexField:
    """
    The stationary wave behind the slits after many bounces with path memory M.

    One bounce maps the field by the Crank–Nicolson propagator
    U = (1 + iτK/2)⁻¹(1 − iτK/2) with K = −(ƀ/2m₀)∇² + V/ƀ − E/ƀ − iW,
    where E is the energy of a wave of wavelength λ on the grid and W the
    edge sponge. With q = exp(−1/M) the memory sum is
    Σ qⁿUⁿs = [(1 − q) + (1 + q)iτK/2]⁻¹(1 + iτK/2)s. The source s is the
    line of impacts left by the incoming droplets, two wavelengths in front
    of the barrier. Wall nodes of the barrier row are held at zero.

    Raises:
        DomainError: If memory is not positive or an aperture is narrower
            than the grid step.
    """
    if memory <= 0:
        raise DomainError(f"memory must be positive, got {memory}")
    if points_per_wavelength < 6:
        # centred phase differences span 4π/points, which must stay below π
        raise DomainError(f"need at least 6 points per wavelength, got {points_per_wavelength}")
    lam = geometry.wavelength
    dx = lam / points_per_wavelength
    radius = geometry.far_field_radius
    sponge = SPONGE_WAVELENGTHS * lam
    half_width = radius + sponge + 2 * lam
    x = _axis(-half_width, half_width, dx)
    y = _axis(-(SOURCE_WAVELENGTHS + 1) * lam - sponge, radius + sponge + 2 * lam, dx)
    shape = (len(x), len(y))
    tau = 2 * math.pi / params.omega0
    template = ComplexField.on_grid(
        np.zeros(shape, dtype=np.complex128), (float(x[0]), float(y[0])), dx, tau, boundary=Boundary.ABSORBING
    )

    # on-grid resonance: a plane wave along an axis has wavelength exactly λ
    resonance = 2.0 * params.diffusivity * (math.sin(math.pi * dx / lam) / dx) ** 2
    absorption = sponge_profile(template, 0.0, DEFAULT_SPONGE_STRENGTH, params, thickness=sponge)
    X, Y = template.coords()
    rate = params.potential_on(X, Y) / params.bbar - resonance - 1j * absorption
    K = (-0.5 * params.diffusivity * dirichlet_laplacian(shape, dx) + sp.diags(np.ravel(rate))).astype(np.complex128)
    identity = sp.identity(K.shape[0], dtype=np.complex128, format="csr")
    q = math.exp(-1.0 / memory)
    memory_sum = ((1.0 - q) * identity + (1.0 + q) * 0.5j * tau * K).tocsr()
    deposit = (identity + 0.5j * tau * K).tocsr()

    source = np.zeros(shape, dtype=np.complex128)
    source[:, int(np.argmin(np.abs(y + SOURCE_WAVELENGTHS * lam)))] = 1.0
    barrier = int(np.argmin(np.abs(y)))
    wall = np.zeros(shape, dtype=bool)
    wall[:, barrier] = ~aperture_mask(geometry, x, dx)
    free = np.flatnonzero(~np.ravel(wall))

    rhs = (deposit @ np.ravel(source))[free]
    solution = np.zeros(K.shape[0], dtype=np.complex128)
    solution[free] = splu(memory_sum[free][:, free].tocsc()).solve(rhs)
    logger.debug(
        "diffracted field on {nx}x{ny} nodes, memory {memory:g} bounces",
        nx=shape[0],
        ny=shape[1],
        memory=memory,
    )
    return template.with_samples(solution.reshape(shape))


def slit_start_positions(geometry: SlitGeometry, seed: int, count: int) -> NDArray[np.float64]:
    """Uniform starts across the apertures, each from its own random stream."""
    draws = uniform_draws(seed, Stream.SLIT_STARTS, count, 2)
    centres = np.asarray(geometry.centres)
    which = np.minimum((draws[:, 0] * len(centres)).astype(int), len(centres) - 1)
    return centres[which] + geometry.width * (draws[:, 1] - 0.5)


def guided_exit_angles(
    psi: ComplexField,
    params: PilotWaveParams,
    starts: NDArray[np.float64],
    radius: float,
    max_steps: Optional[int] = None,
) -> NDArray[np.float64]:
    """
    Exit angles (degrees from the slit normal, signed) of droplets started on the barrier.

    Droplets move at constant speed along the guidance velocity, taking
    midpoint steps of half a grid cell, and keep their heading across
    nodes. A droplet is lost (NaN) if it falls back through the barrier row,
    leaves the grid or has not reached `radius` after `max_steps` steps.
    """
    guide = GuidanceField(psi, params)
    ds = 0.5 * psi.dx
    max_steps = max_steps or int(math.ceil(3 * radius / ds))
    n = len(starts)
    position = np.stack([np.asarray(starts, dtype=np.float64), np.zeros(n)], axis=1)
    heading = np.tile([0.0, 1.0], (n, 1))
    angles = np.full(n, np.nan)
    active = np.ones(n, dtype=bool)
    for _ in range(max_steps):
        if not active.any():
            break
        idx = np.flatnonzero(active)
        here = position[idx]
        first = _direction(guide, here, heading[idx])
        mid = here + 0.5 * ds * first
        inside = guide.contains(mid)
        second = first.copy()
        second[inside] = _direction(guide, mid[inside], first[inside])
        moved = here + ds * second
        position[idx] = moved
        heading[idx] = second
        fell = ~inside | (moved[:, 1] < 0.0) | ~guide.contains(moved)
        out = ~fell & (np.hypot(moved[:, 0], moved[:, 1]) >= radius)
        angles[idx[out]] = np.degrees(np.arctan2(moved[out, 0], moved[out, 1]))
        active[idx[fell | out]] = False
    return angles


def _direction(guide: GuidanceField, points: NDArray[np.float64], heading: NDArray[np.float64]) -> NDArray[np.float64]:
    velocity, nodes = guide.velocities(points)
    speed = np.linalg.norm(velocity, axis=1)
    good = ~nodes & (speed > 0)
    out = heading.copy()
    out[good] = velocity[good] / speed[good, None]
    return out


def slit_experiment(
    geometry: SlitGeometry,
    params: PilotWaveParams,
    seed: int,
    count: int,
    memory: float = DEFAULT_MEMORY,
    points_per_wavelength: int = DEFAULT_POINTS_PER_WAVELENGTH,
) -> SlitRun:
    """Exit angles of `count` droplets with reproducible random starts."""
    psi = diffracted_field(geometry, params, memory=memory, points_per_wavelength=points_per_wavelength)
    radius = geometry.far_field_radius
    starts = slit_start_positions(geometry, seed, count)
    angles = guided_exit_angles(psi, params, starts, radius)
    reached = np.isfinite(angles)
    lost = int(count - reached.sum())
    if lost:
        logger.warning("{lost} of {count} droplets never reached the far field", lost=lost, count=count)
    logger.info(
        "{count} droplets through {kind} slit(s), far field at {r:.0f} mm",
        count=count,
        kind=geometry.kind.value,
        r=radius,
    )
    return SlitRun(angles=angles[reached], lost=lost, radius=radius, field=psi)

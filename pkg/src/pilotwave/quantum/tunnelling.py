# -*- coding: utf-8 -*-
"""
Transmission of a wave packet through a rectangular barrier.

The packet is evolved on an absorbing grid until it has left the barrier;
the transmitted probability is the norm beyond the barrier's right edge.
Barriers cover whole grid cells, so the effective width is the number of
barrier nodes times dx.
"""
import math
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Optional, Sequence

import numpy as np
import pandas as pd
from loguru import logger
from pydantic import BaseModel, ConfigDict, Field

from common.errors import DomainError

from .evolution import StepCallback, evolve, make_stepper
from .field import Boundary, ComplexField
from .pilot import PilotWaveParams, gaussian_packet

TUNNELLING_COLUMNS = ["width", "effective_width", "transmission"]


class PacketSpec(BaseModel):
    """Incident Gaussian packet and the grid it lives on (natural units by default)."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    sigma0: float = Field(default=10.0, gt=0)
    k0: float = Field(default=1.0, gt=0)
    x0: float = -60.0
    lower: float = -150.0
    upper: float = 150.0
    points: int = Field(default=2048, ge=16)
    dt: float = Field(default=0.01, gt=0)
    duration: float = Field(default=120.0, gt=0)

    @property
    def dx(self) -> float:
        return (self.upper - self.lower) / self.points

    def energy(self, params: PilotWaveParams) -> float:
        """Mean kinetic energy ƀ²k₀²/(2m₀)."""
        return params.bbar**2 * self.k0**2 / (2 * params.m0)


def rectangular_barrier_transmission(energy: float, height: float, width: float, params: PilotWaveParams) -> float:
    """
    Exact plane-wave transmission through a barrier of `height` and `width`.

    T = 1/(1 + V₀²sinh²(κw)/(4E(V₀ − E))) with κ = √(2m₀(V₀ − E))/ƀ, for E < V₀.
    """
    if not 0 < energy < height:
        raise DomainError(f"the closed form covers 0 < E < V₀, got E={energy}, V₀={height}")
    if width == 0:
        return 1.0
    kappa = math.sqrt(2 * params.m0 * (height - energy)) / params.bbar
    return 1.0 / (1.0 + height**2 * math.sinh(kappa * width) ** 2 / (4 * energy * (height - energy)))


def barrier_mask(x: np.ndarray, width: float) -> np.ndarray:
    """Nodes with 0 ≤ x < width."""
    return (x >= 0.0) & (x < width)


def transmission(
    width: float,
    height: float,
    packet: PacketSpec,
    params: PilotWaveParams,
    callback: Optional[StepCallback] = None,
) -> tuple[float, float]:
    """(effective width, transmitted probability) for one barrier."""
    x = packet.lower + packet.dx * np.arange(packet.points)
    mask = barrier_mask(x, width)
    effective = float(mask.sum() * packet.dx)
    right_edge = x[mask][-1] + packet.dx if mask.any() else 0.0

    def potential(coords: np.ndarray) -> np.ndarray:
        return np.where(barrier_mask(coords, width), height, 0.0)

    barrier = PilotWaveParams(
        bbar=params.bbar,
        m0=params.m0,
        omega0=params.omega0,
        c=params.c,
        potential=potential,
    )
    samples = gaussian_packet(x, 0.0, packet.sigma0, packet.k0, packet.x0, barrier)
    psi = ComplexField.on_grid(samples, packet.lower, packet.dx, packet.dt, boundary=Boundary.ABSORBING).normalized()
    steps = int(round(packet.duration / packet.dt))
    final = evolve(psi, barrier, steps, callback=callback, stepper=make_stepper(psi, barrier))
    transmitted = float(np.sum(final.density()[x >= right_edge - 1e-12]) * packet.dx)
    return effective, transmitted


def tunnelling_sweep(
    widths: Sequence[float],
    barrier_height: float,
    packet: PacketSpec,
    params: PilotWaveParams,
    workers: int = 1,
    observer: Optional[Callable[[float], Optional[StepCallback]]] = None,
) -> pd.DataFrame:
    """
    Transmitted probability per barrier width, rows sorted by width.

    Packets with mean energy above the barrier are still run, with a
    warning: they pass over rather than tunnel. `observer(width)` may return a
    step callback for that width (snapshots).
    """
    if barrier_height <= 0:
        raise DomainError(f"barrier height must be positive, got {barrier_height}")
    if any(w < 0 for w in widths):
        raise DomainError("barrier widths must be non-negative")
    energy = packet.energy(params)
    if energy >= barrier_height:
        logger.warning(
            "packet energy {e:.3g} is above the barrier {v:.3g}; transmission is over-barrier, not tunnelling",
            e=energy,
            v=barrier_height,
        )
    ordered = sorted(widths)
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        results = list(
            pool.map(
                lambda w: transmission(w, barrier_height, packet, params, observer(w) if observer else None),
                ordered,
            )
        )
    return pd.DataFrame(
        [(w, eff, t) for w, (eff, t) in zip(ordered, results)],
        columns=TUNNELLING_COLUMNS,
    )

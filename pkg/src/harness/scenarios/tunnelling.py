# -*- coding: utf-8 -*-
from pathlib import Path
from typing import Optional

import numpy as np
from pydantic import Field

from pilotwave.quantum.diagnostics import dropped_term_ratio
from pilotwave.quantum.evolution import StepCallback, evolve
from pilotwave.quantum.field import Boundary, ComplexField, write_snapshot
from pilotwave.quantum.pilot import PilotWaveParams, gaussian_packet
from pilotwave.quantum.tunnelling import PacketSpec, rectangular_barrier_transmission, tunnelling_sweep

from ..fitting import fit_exponential
from .base import RunContext, Scenario, ScenarioParams


def _default_widths() -> list[float]:
    return [0.0] + [1.0 + 0.25 * i for i in range(9)]


class TunnellingParams(ScenarioParams):
    """
    Barrier sweep in units with c = ω₀ = m₀ = ƀ = 1.

    Attributes:
        widths (list[float]): Barrier widths; zero is the no-barrier control.
        barrier_height (float): V₀.
        packet (PacketSpec): Incident packet and grid.
        snapshot_width (Optional[float]): Width whose evolution is
            snapshotted when `output.snapshot_cadence` > 0; defaults to the
            narrowest non-zero width.
    """

    widths: list[float] = Field(default_factory=_default_widths, min_length=1)
    barrier_height: float = Field(default=1.0, gt=0)
    packet: PacketSpec = Field(default_factory=PacketSpec)
    snapshot_width: Optional[float] = Field(default=None, ge=0)


class TunnellingSweep(Scenario):
    name = "tunnelling_sweep"
    Params = TunnellingParams

    def run(self, ctx: RunContext, params: TunnellingParams) -> Scenario.Result:
        packet = self._packet(ctx, params)
        units = PilotWaveParams.natural()
        written: list[Path] = []
        observer = None
        if ctx.snapshot_cadence > 0:
            nonzero = [w for w in params.widths if w > 0]
            target = params.snapshot_width if params.snapshot_width is not None else min(nonzero or params.widths)
            observer = _snapshot_observer(ctx, target, written)

        table = tunnelling_sweep(
            params.widths, params.barrier_height, packet, units, workers=ctx.workers, observer=observer
        )
        energy = packet.energy(units)
        table["oracle"] = [
            rectangular_barrier_transmission(energy, params.barrier_height, w, units) for w in table["effective_width"]
        ]

        barriers = table[table["effective_width"] > 0]
        simulated = fit_exponential(barriers["effective_width"], barriers["transmission"])
        oracle = fit_exponential(barriers["effective_width"], barriers["oracle"])
        zero = table[table["effective_width"] == 0]["transmission"]
        return Scenario.Result(
            kind=Scenario.Kind.QUANTITATIVE,
            tables={"tunnelling": table},
            summary={
                "decay_rate": simulated.slope,
                "oracle_decay_rate": oracle.slope,
                "decay_rate_relative_error": abs(simulated.slope - oracle.slope) / abs(oracle.slope),
                "r_squared": simulated.r_squared,
                "zero_width_transmission": float(zero.iloc[0]) if len(zero) else None,
                "packet_energy": energy,
                "barrier_height": params.barrier_height,
                "dropped_term_ratio": dropped_term_ratio(_incident_levels(packet, units), units),
            },
            extra_files=sorted(written),
        )

    @staticmethod
    def _packet(ctx: RunContext, params: TunnellingParams) -> PacketSpec:
        update: dict[str, float | int] = {}
        numerics = ctx.numerics
        if numerics.extent is not None:
            update["lower"], update["upper"] = -numerics.extent, numerics.extent
        if numerics.dt is not None:
            update["dt"] = numerics.dt
        packet = params.packet.model_copy(update=update)
        if numerics.dx is not None:
            packet = packet.model_copy(update={"points": int(round((packet.upper - packet.lower) / numerics.dx))})
        return packet


def _snapshot_observer(ctx: RunContext, target: float, written: list[Path]):
    def observer(width: float) -> Optional[StepCallback]:
        if not np.isclose(width, target):
            return None

        def snapshot(step: int, psi: ComplexField) -> None:
            if step % ctx.snapshot_cadence == 0:
                stem = ctx.directory / "snapshots" / f"width_{width:g}_step_{step:06d}"
                written.extend(write_snapshot(psi, stem))

        return snapshot

    return observer


def _incident_levels(packet: PacketSpec, units: PilotWaveParams) -> list[ComplexField]:
    """The free incident packet at its first three time levels."""
    x = packet.lower + packet.dx * np.arange(packet.points)
    samples = gaussian_packet(x, 0.0, packet.sigma0, packet.k0, packet.x0, units)
    psi = ComplexField.on_grid(samples, packet.lower, packet.dx, packet.dt, boundary=Boundary.ABSORBING)
    levels = [psi.normalized()]
    evolve(levels[0], units, 2, callback=lambda _, level: levels.append(level))
    return levels

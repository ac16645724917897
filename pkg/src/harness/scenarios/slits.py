# -*- coding: utf-8 -*-
from pathlib import Path

import numpy as np
from pydantic import Field

from pilotwave.quantum.field import write_snapshot
from pilotwave.quantum.pilot import (
    PilotWaveParams,
    SlitKind,
    double_slit_first_minimum,
    far_field_intensity,
    single_slit_first_minimum,
)
from pilotwave.quantum.slits import DEFAULT_MEMORY, DEFAULT_POINTS_PER_WAVELENGTH, SlitGeometry, slit_experiment

from ..fitting import first_local_minimum
from ..histogram import histogram, uniform_edges
from .base import RunContext, Scenario, ScenarioParams


class SlitParams(ScenarioParams):
    """
    Attributes:
        wavelength (float): Pilot-wave wavelength λ (mm).
        width (float): Aperture width L (mm).
        separation (float): Slit spacing d (mm), double slit only.
        droplets (int): Monte Carlo droplets; `numerics.ensemble_size` overrides.
        bin_width (float): Histogram bin width (degrees).
        memory (float): Path memory M in bounces; the wave left by each
            bounce decays by exp(−1/M) per bounce.
        points_per_wavelength (int): Grid resolution of the diffracted field.
    """

    wavelength: float = Field(default=7.3, gt=0)
    width: float = Field(default=14.8, gt=0)
    separation: float = Field(default=0.0, ge=0)
    droplets: int = Field(default=10_000, ge=1)
    bin_width: float = Field(default=5.0, gt=0, le=45)
    memory: float = Field(default=DEFAULT_MEMORY, gt=0)
    points_per_wavelength: int = Field(default=DEFAULT_POINTS_PER_WAVELENGTH, ge=6)


class DoubleSlitParams(SlitParams):
    """
    Two apertures 14.3 mm apart.

    The aperture width has no measured counterpart. The 4.0 mm default is
    narrower than λ, so the single-slit envelope has no zero and the first
    dip is the interference minimum. Set `width` to match a given barrier.
    """

    width: float = Field(default=4.0, gt=0)
    separation: float = Field(default=14.3, gt=0)


class _SlitScenario(Scenario):
    kind: SlitKind

    def run(self, ctx: RunContext, params: SlitParams) -> Scenario.Result:
        geometry = SlitGeometry(
            kind=self.kind,
            wavelength=params.wavelength,
            width=params.width,
            separation=params.separation,
        )
        pilot = PilotWaveParams.from_medium(ctx.medium, m0=1.0)
        droplets = ctx.numerics.ensemble_size or params.droplets
        run = slit_experiment(
            geometry,
            pilot,
            ctx.seed,
            droplets,
            memory=params.memory,
            points_per_wavelength=params.points_per_wavelength,
        )

        # both sides of the axis folded together
        hist = histogram(np.abs(run.angles), uniform_edges(0.0, 90.0, params.bin_width))
        table = hist.to_frame()
        table["far_field"] = far_field_intensity(
            self.kind, params.wavelength, params.width, params.separation, hist.centres
        )
        minimum = first_local_minimum(hist.counts.tolist())
        if self.kind is SlitKind.SINGLE:
            analytic = single_slit_first_minimum(params.wavelength, params.width)
        else:
            analytic = double_slit_first_minimum(params.wavelength, params.separation)
        written: list[Path] = []
        if ctx.snapshot_cadence > 0:
            written.extend(write_snapshot(run.field, ctx.directory / "snapshots" / f"{self.name}_field"))
        summary = {
            "analytic_minimum_deg": analytic,
            "droplets": droplets,
            "lost": run.lost,
            "memory": params.memory,
            "far_field_radius": run.radius,
            "mc_minimum_bin": None if minimum is None else [float(hist.edges[minimum]), float(hist.edges[minimum + 1])],
            "overflow": hist.overflow,
        }
        return Scenario.Result(
            kind=Scenario.Kind.QUANTITATIVE,
            tables={"angles": table},
            summary=summary,
            extra_files=sorted(written),
        )


class SingleSlit(_SlitScenario):
    name = "single_slit"
    Params = SlitParams
    kind = SlitKind.SINGLE


class DoubleSlit(_SlitScenario):
    name = "double_slit"
    Params = DoubleSlitParams
    kind = SlitKind.DOUBLE

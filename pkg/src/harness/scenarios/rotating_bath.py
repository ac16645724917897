# -*- coding: utf-8 -*-
import math

import numpy as np
import pandas as pd
from pydantic import Field

from pilotwave.quantum.pilot import PilotWaveParams, de_broglie_wavelength

from .base import RunContext, Scenario, ScenarioParams


class RotatingBathParams(ScenarioParams):
    speed_fraction: float = Field(default=0.5, gt=0, lt=1)
    omega_min: float = Field(default=0.1, gt=0)
    omega_max: float = Field(default=1.0, gt=0)
    points: int = Field(default=10, ge=2)
    orbit_samples: int = Field(default=72, ge=8)


class RotatingBathDemo(Scenario):
    """
    Inertial orbits of a walker in a bath rotating at Ω.

    The Coriolis force bends a walker of speed v onto a circle of radius
    v/(2Ω). The table relates that radius to the pilot-wave wavelength;
    quantisation of the orbits is not modelled.
    """

    name = "rotating_bath_demo"
    Params = RotatingBathParams

    def run(self, ctx: RunContext, params: RotatingBathParams) -> Scenario.Result:
        medium = ctx.medium
        pilot = PilotWaveParams.from_medium(medium, m0=1.0)
        v = params.speed_fraction * medium.c
        lam = de_broglie_wavelength(v, pilot)
        omegas = np.linspace(params.omega_min, params.omega_max, params.points) * 2 * math.pi
        radii = v / (2 * omegas)
        radii_table = pd.DataFrame(
            {
                "bath_omega": omegas,
                "orbit_radius": radii,
                "radius_over_wavelength": radii / lam,
            }
        )

        # one orbit at the slowest rotation, in the rotating frame
        phase = np.linspace(0.0, 2 * math.pi, params.orbit_samples + 1)
        orbit = pd.DataFrame(
            {
                "t": phase / (2 * omegas[0]),
                "x": radii[0] * np.sin(phase),
                "y": radii[0] * (1 - np.cos(phase)),
            }
        )
        return Scenario.Result.qualitative(
            tables={"orbit_radii": radii_table, "orbit": orbit},
            summary={"walker_speed": v, "wavelength": lam},
            detail="Coriolis orbits R = v/(2Ω); plot-ready data only",
        )

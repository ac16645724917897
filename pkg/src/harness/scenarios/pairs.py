# -*- coding: utf-8 -*-
import math

import numpy as np
import pandas as pd
from pydantic import Field

from common.errors import DomainError
from pilotwave.forces import Geometry
from pilotwave.spin import (
    RotatingPair,
    dipole_droplets,
    far_field_circulation,
    mode_overlap,
    pair_alignment_torque,
    rotating_pair_height,
)

from .base import RunContext, Scenario, ScenarioParams


def _default_fractions() -> list[float]:
    return [0.0, 0.002, 0.005]


class OrbitingPairParams(ScenarioParams):
    """
    Attributes:
        omega_fractions (list[float]): Orbital frequencies Ω as fractions of ω₀.
        radial_points (int): Samples over 0 < k_r r ≤ 3 for the field comparison.
        angular_points (int): Samples over θ.
        periods (float): Time span in bounce periods for the comparison.
    """

    omega_fractions: list[float] = Field(default_factory=_default_fractions, min_length=1)
    radial_points: int = Field(default=24, ge=2)
    angular_points: int = Field(default=36, ge=4)
    periods: float = Field(default=4.0, gt=0)


class OrbitingPair(Scenario):
    name = "orbiting_pair"
    Params = OrbitingPairParams

    def run(self, ctx: RunContext, params: OrbitingPairParams) -> Scenario.Result:
        medium = ctx.medium
        r = np.linspace(0.0, 3.0 / medium.k_r, params.radial_points + 1)[1:]
        theta = np.linspace(0.0, 2 * math.pi, params.angular_points, endpoint=False)
        times = np.linspace(0.0, params.periods * medium.tau, 4 * int(math.ceil(params.periods)) + 1)
        R, TH, T = np.meshgrid(r, theta, times, indexing="ij")

        rows = []
        for fraction in params.omega_fractions:
            pair = RotatingPair.orbiting(fraction * medium.omega0, medium)
            exact = rotating_pair_height(pair, R, TH, T, medium)
            factored = rotating_pair_height(pair, R, TH, T, medium, factored=True)
            node = rotating_pair_height(pair, r, pair.Omega * times[-1] + math.pi / 2, times[-1], medium, factored=True)
            rows.append(
                {
                    "omega_fraction": fraction,
                    "max_abs_difference": float(np.max(np.abs(exact - factored))),
                    "relative_difference": float(np.max(np.abs(exact - factored)) / max(medium.h0, 1e-300)),
                    "node_line_max": float(np.max(np.abs(node))),
                }
            )
        comparison = pd.DataFrame(rows)

        r0 = 1.8 / medium.k_r
        overlaps = pd.DataFrame(
            [
                {"m": m, "n": n, "overlap": mode_overlap(m, n, r0, medium)}
                for m, n in ((1, 1), (-1, -1), (1, -1), (0, 1))
            ]
        )

        radii = np.linspace(12.0, 40.0, 15) / medium.k_r
        circulation = {m: far_field_circulation(m, radii, medium) for m in (1, -1)}
        return Scenario.Result.ok(
            tables={"factored_vs_exact": comparison, "mode_overlap": overlaps},
            summary={
                "max_relative_difference": float(comparison["relative_difference"].max()),
                "circulation_sign": {str(m): c.sign for m, c in circulation.items()},
                "circulation_slope": {str(m): c.slope for m, c in circulation.items()},
            },
        )


class TorqueParams(ScenarioParams):
    """
    Pair A sits at the origin with its dipole along x; pair B sits at
    (separation, 0) and is turned through `orientations`.
    """

    separation: float = Field(default=10.0, gt=0)
    half_spacing: float = Field(default=1.0, gt=0)
    flow: float = Field(default=1.0, gt=0)
    orientations: int = Field(default=24, ge=2)


class PairAlignmentTorque(Scenario):
    name = "pair_alignment_torque"
    Params = TorqueParams

    def run(self, ctx: RunContext, params: TorqueParams) -> Scenario.Result:
        medium = ctx.medium
        if params.separation <= 2 * params.half_spacing:
            raise DomainError("pairs must not overlap")
        frequency = medium.omega0
        pair_a = dipole_droplets((0.0, 0.0), 0.0, params.half_spacing, params.flow, frequency)
        centre_b = (params.separation, 0.0)
        angles = np.linspace(0.0, 360.0, params.orientations, endpoint=False)
        torques = []
        for angle in angles:
            pair_b = dipole_droplets(centre_b, math.radians(angle), params.half_spacing, params.flow, frequency)
            torques.append(pair_alignment_torque(pair_a, pair_b, centre_b, medium.rho0, Geometry.HEMISPHERE))
        table = pd.DataFrame({"orientation_deg": angles, "torque": torques})

        perpendicular = dipole_droplets(centre_b, math.pi / 2, params.half_spacing, params.flow, frequency)
        torque_90 = pair_alignment_torque(pair_a, perpendicular, centre_b, medium.rho0, Geometry.HEMISPHERE)
        return Scenario.Result.ok(
            tables={"torque": table},
            summary={
                "torque_at_90_deg": torque_90,
                "turns_towards": "antiparallel" if torque_90 > 0 else "parallel",
            },
        )

# -*- coding: utf-8 -*-
import math
from typing import Optional

import numpy as np
import pandas as pd
from pydantic import Field

from pilotwave.bounce import WalkerState
from pilotwave.forces import ForceConstants, speed_from_slope_ratio
from pilotwave.reflection import ReflectionConfig, Trajectory, Wall, boundary_reflection

from ..fitting import fit_line
from .base import RunContext, Scenario, ScenarioParams


class ReflectionParams(ScenarioParams):
    """
    Head-on approach to a wall at y = 0, run with and without the magnetic term.

    The wave speed and bounce frequency come from the medium. The walker
    keeps its speed; its parallel speed grows as it slows towards the wall,
    reaching the full speed at the turning point. Slopes of V⊥² against 1/r
    are compared over the stretch where V⊥² ≤ turn_window·speed².

    Attributes:
        speed (Optional[float]): Free walker speed S (mm/s); defaults to the
            speed whose magnetic reduction matches `reference_ratio`.
        alpha (float): Coupling α of the wall's image force.
        m_eff (float): Walker mass (g).
        start_distance (float): Initial wall distance (mm).
        near_wall (float): Largest wall distance used in the incoming fit (mm).
        turn_window (float): Share of S² in V⊥² kept for the slope fits.
        reference_ratio (float): Observed slope ratio to invert for v/c.
    """

    speed: Optional[float] = Field(default=None, gt=0)
    alpha: float = Field(default=3.65, gt=0)
    m_eff: float = Field(default=1.0, gt=0)
    start_distance: float = Field(default=10.0, gt=0)
    near_wall: float = Field(default=10.0, gt=0)
    turn_window: float = Field(default=0.05, gt=0, le=1)
    reference_ratio: float = Field(default=14.0 / 18.0, gt=0, le=1)


class BoundaryReflection(Scenario):
    name = "boundary_reflection"
    Params = ReflectionParams

    def run(self, ctx: RunContext, params: ReflectionParams) -> Scenario.Result:
        medium = ctx.medium
        c = medium.c
        speed = params.speed or c * speed_from_slope_ratio(params.reference_ratio)
        consts = ForceConstants.for_mass(params.alpha, params.m_eff, medium.omega0, c)
        walker = WalkerState(
            position=(0.0, params.start_distance),
            velocity=(0.0, -speed),
            T=0.0,
            speed_cap=speed,
        ).validate_against(medium)
        wall = Wall()
        steps = ctx.numerics.steps or ReflectionConfig().steps_per_bounce
        plain = boundary_reflection(
            walker, wall, consts, ReflectionConfig(magnetic=False, steps_per_bounce=steps, strobe_steps=1)
        )
        magnetic = boundary_reflection(
            walker, wall, consts, ReflectionConfig(magnetic=True, steps_per_bounce=steps, strobe_steps=1)
        )

        window = math.sqrt(params.turn_window) * speed
        incoming = fit_line(*plain.branch_samples(Trajectory.INCOMING, params.near_wall))
        turn_plain = fit_line(*plain.branch_samples(Trajectory.OUTGOING, max_normal_speed=window))
        turn_magnetic = fit_line(*magnetic.branch_samples(Trajectory.OUTGOING, max_normal_speed=window))
        ratio = turn_magnetic.slope / turn_plain.slope
        expected = 1.0 - (speed / c) ** 2
        v0 = math.sqrt(max(incoming.intercept, 0.0))

        frames = []
        deviation = 0.0
        for label, trajectory in (("plain", plain), ("magnetic", magnetic)):
            frame = trajectory.to_frame()
            frame.insert(0, "run", label)
            frame["r"] = trajectory.wall_distance()
            frames.append(frame)
            deviation = max(deviation, float(np.max(np.abs(np.hypot(trajectory.vx, trajectory.vy) - speed))))
        return Scenario.Result.ok(
            tables={"reflection": pd.concat(frames, ignore_index=True)},
            summary={
                "c": c,
                "incoming_r_squared": incoming.r_squared,
                "outgoing_r_squared": turn_magnetic.r_squared,
                "extrapolated_v0": v0,
                "free_speed": speed,
                "v0_relative_error": abs(v0 - speed) / speed,
                "max_speed_deviation": deviation,
                "parallel_speed_at_turn": magnetic.acquired_parallel_speed,
                "slope_ratio": ratio,
                "expected_slope_ratio": expected,
                "inferred_v_over_c": speed_from_slope_ratio(ratio),
                "reference_ratio": params.reference_ratio,
                "reference_v_over_c": speed_from_slope_ratio(params.reference_ratio),
                "turning_time_plain": plain.turning_time,
                "turning_time_magnetic": magnetic.turning_time,
            },
        )

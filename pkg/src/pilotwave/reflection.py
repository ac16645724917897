# -*- coding: utf-8 -*-
"""
Walker reflection from a straight wall.

The wall acts like an antiphase image droplet at the mirror point, so the
walker feels the inverse-square repulsion αƀc/(2r)² at wall distance r. When
walker and image move in parallel, the magnetic analogue reduces this by
1 − v∥²/c². Along each branch the perpendicular speed then obeys
V⊥² = V₀² − B/r with B = αƀc(1 − v∥²/c²)/(2m) while v∥ stays fixed. A
walker held at constant speed trades normal for parallel speed as it slows,
so the reduction grows towards the turning point.
"""
import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np
import pandas as pd
from loguru import logger
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict, Field, field_validator

from common.errors import DomainError, IntegrationError

from .bounce import WalkerState
from .forces import ForceConstants
from .wavefield import Point

TRAJECTORY_COLUMNS = ["t", "x", "y", "vx", "vy", "branch"]


class Wall(BaseModel):
    """Infinite straight wall through `point`; `normal` points into the bath."""

    model_config = ConfigDict(frozen=True)

    point: Point = (0.0, 0.0)
    normal: Point = (0.0, 1.0)

    @field_validator("normal")
    @classmethod
    def _unit_normal(cls, normal: Point) -> Point:
        length = math.hypot(*normal)
        if length == 0.0 or not math.isfinite(length):
            raise ValueError("wall normal must be a non-zero vector")
        return (normal[0] / length, normal[1] / length)

    @property
    def tangent(self) -> Point:
        return (self.normal[1], -self.normal[0])

    def distance(self, x: float | NDArray, y: float | NDArray) -> float | NDArray:
        return (x - self.point[0]) * self.normal[0] + (y - self.point[1]) * self.normal[1]


class ReflectionConfig(BaseModel):
    """
    Integration controls for `boundary_reflection`.

    Attributes:
        steps_per_bounce (int): Velocity-Verlet steps per bounce period.
        strobe_steps (int): Steps between emitted records.
        t_max (float): Hard stop (s).
        magnetic (bool): Apply the 1 − v∥²/c² reduction.
        speed_regulation (SpeedRegulation): How the walker's speed is held;
            `renormalize` keeps |v| at the speed cap, `turnaround` is the
            two-branch variant whose outgoing speed exceeds it.
        acquired_parallel_speed (Optional[float]): Parallel speed taken up at
            the turning point under `turnaround`; defaults to the speed cap.
        from_far_field (bool): Treat the given velocity as the one far from
            the wall and start on the matching branch at the walker's position.
        exit_distance (Optional[float]): Stop once the outgoing walker is this
            far from the wall; defaults to the starting distance.
        energy_tolerance (float): Allowed relative drift of the quantity
            conserved on a branch (V⊥² + B/r without speed regulation).
    """

    class SpeedRegulation(Enum):
        NONE = "none"
        RENORMALIZE = "renormalize"
        TURNAROUND = "turnaround"

    model_config = ConfigDict(frozen=True, extra="forbid")

    steps_per_bounce: int = Field(default=50, ge=1)
    strobe_steps: int = Field(default=50, ge=1)
    t_max: float = Field(default=20.0, gt=0)
    magnetic: bool = True
    speed_regulation: SpeedRegulation = SpeedRegulation.RENORMALIZE
    acquired_parallel_speed: Optional[float] = Field(default=None, ge=0)
    from_far_field: bool = True
    exit_distance: Optional[float] = Field(default=None, gt=0)
    energy_tolerance: float = Field(default=1e-3, gt=0)


@dataclass
class Trajectory:
    """Strobed walker records plus the wall they refer to."""

    wall: Wall
    t: NDArray[np.float64]
    x: NDArray[np.float64]
    y: NDArray[np.float64]
    vx: NDArray[np.float64]
    vy: NDArray[np.float64]
    branch: NDArray[np.int64]
    turning_time: Optional[float] = None
    acquired_parallel_speed: float = 0.0
    incoming_parallel_speed: float = 0.0

    INCOMING = 0
    OUTGOING = 1

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            {
                "t": self.t,
                "x": self.x,
                "y": self.y,
                "vx": self.vx,
                "vy": self.vy,
                "branch": self.branch,
            },
            columns=TRAJECTORY_COLUMNS,
        )

    def wall_distance(self) -> NDArray[np.float64]:
        return np.asarray(self.wall.distance(self.x, self.y))

    def normal_speed(self) -> NDArray[np.float64]:
        nx, ny = self.wall.normal
        return self.vx * nx + self.vy * ny

    def branch_samples(
        self,
        branch: int,
        max_distance: Optional[float] = None,
        max_normal_speed: Optional[float] = None,
    ) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
        """
        (1/r, V⊥²) pairs of one branch.

        Optionally limited to r ≤ max_distance and to |V⊥| ≤ max_normal_speed,
        the latter picking out the stretch around the turning point.
        """
        r = self.wall_distance()
        v_perp = self.normal_speed()
        mask = self.branch == branch
        if max_distance is not None:
            mask &= r <= max_distance
        if max_normal_speed is not None:
            mask &= np.abs(v_perp) <= max_normal_speed
        return 1.0 / r[mask], v_perp[mask] ** 2


def boundary_reflection(
    walker: WalkerState,
    wall: Wall,
    consts: ForceConstants,
    cfg: ReflectionConfig = ReflectionConfig(),
) -> Trajectory:
    """
    Integrate a walker's approach to and departure from a wall.

    Velocity Verlet with dt = τ/steps_per_bounce (τ = 2π/consts.omega).

    Under `renormalize` (the default) the walker keeps |v| = speed_cap at
    every step: the normal motion follows the wall force and the parallel
    speed takes up the rest, √(cap² − V⊥²), keeping its sign. A walker aimed
    exactly head-on has no parallel motion to follow and veers along
    +wall.tangent. With the magnetic term the quantity
    c²·ln(1 + (V⊥² − cap²)/c²) + B₀/r is conserved, B₀ being the unreduced
    strength, so V⊥² against 1/r has slope −B₀(1 − v∥²/c²) and flattens to
    −B₀(1 − cap²/c²) at the turning point.

    Under `turnaround` the incoming branch keeps its parallel speed; when the
    normal velocity changes sign the walker takes up the acquired parallel
    speed along its current tangential direction and keeps it outward. Both
    branches are then exactly linear in 1/r, but the outgoing speed
    √(V⊥² + acquired²) exceeds the cap.

    Raises:
        DomainError: If the walker is not in front of the wall, not
            approaching it, or its speed differs from its speed cap.
        IntegrationError: If the walker touches the wall, a single step moves
            it more than half its wall distance, or the conserved quantity of
            the branch drifts beyond the tolerance.
    """
    c = consts.c
    cap = walker.speed_cap
    if cap <= 0 or cap >= c:
        raise DomainError(f"speed cap must lie in (0, c = {c}), got {cap}")
    if not math.isclose(walker.speed, cap, rel_tol=1e-9):
        raise DomainError(f"walker speed {walker.speed} differs from its speed cap {cap}")

    n = np.array(wall.normal)
    tangent = np.array(wall.tangent)
    pos = np.array(walker.position, dtype=np.float64)
    vel = np.array(walker.velocity, dtype=np.float64)
    r_start = float(wall.distance(*pos))
    if r_start <= 0:
        raise DomainError("walker must start on the bath side of the wall")
    if float(vel @ n) >= 0:
        raise DomainError("walker must be approaching the wall")

    regulation = cfg.speed_regulation
    Regulation = ReflectionConfig.SpeedRegulation
    constant_speed = regulation is Regulation.RENORMALIZE
    dt = 2 * math.pi / consts.omega / cfg.steps_per_bounce
    strength = consts.alpha * consts.bbar * c / consts.m_eff
    b0 = 0.5 * strength

    def bend(v_par: float) -> float:
        # B in V⊥² = V₀² − B/r
        factor = 1.0 - (v_par / c) ** 2 if cfg.magnetic else 1.0
        return b0 * factor

    def accel(p: NDArray, v: NDArray) -> NDArray:
        r = float(wall.distance(*p))
        return (bend(float(v @ tangent)) / (2.0 * r * r)) * n

    v_par_in = float(vel @ tangent)
    side = 1.0 if v_par_in >= 0 else -1.0

    def hold_speed(v: NDArray) -> NDArray:
        v_perp = float(np.clip(v @ n, -cap, cap))
        along = float(v @ tangent)
        direction = side if along == 0.0 else math.copysign(1.0, along)
        return v_perp * n + direction * math.sqrt(cap * cap - v_perp * v_perp) * tangent

    def energy(p: NDArray, v: NDArray) -> float:
        v_perp_sq = float(v @ n) ** 2
        inverse_r = 1.0 / float(wall.distance(*p))
        if constant_speed and cfg.magnetic:
            return c * c * math.log1p((v_perp_sq - cap * cap) / (c * c)) + b0 * inverse_r
        return v_perp_sq + bend(float(v @ tangent)) * inverse_r

    if cfg.from_far_field:
        # the given velocity is the one far from the wall
        far = float(vel @ n) ** 2
        if constant_speed and cfg.magnetic:
            slack = c * c - cap * cap
            v_perp_sq = (far + slack) * math.exp(-b0 / (c * c * r_start)) - slack
        elif constant_speed:
            v_perp_sq = far - b0 / r_start
        else:
            v_perp_sq = float(vel @ n) ** 2 - bend(v_par_in) / r_start
        if v_perp_sq <= 0:
            raise DomainError(f"walker from far away turns back before reaching {r_start} mm")
        if constant_speed:
            vel = side * math.sqrt(cap * cap - v_perp_sq) * tangent - math.sqrt(v_perp_sq) * n
        else:
            vel = v_par_in * tangent - math.sqrt(v_perp_sq) * n

    parallel_at_start = abs(float(vel @ tangent))
    acquired = cap if cfg.acquired_parallel_speed is None else cfg.acquired_parallel_speed
    exit_distance = cfg.exit_distance or r_start

    records: list[tuple[float, float, float, float, float, int]] = []
    branch = Trajectory.INCOMING
    turning_time: Optional[float] = None
    parallel_at_turn = 0.0
    t = 0.0
    acc = accel(pos, vel)
    reference = energy(pos, vel)
    records.append((t, pos[0], pos[1], vel[0], vel[1], branch))

    max_steps = int(math.ceil(cfg.t_max / dt))
    step = 0
    for step in range(1, max_steps + 1):
        r_before = float(wall.distance(*pos))
        pos = pos + vel * dt + 0.5 * acc * dt * dt
        t = step * dt
        r = float(wall.distance(*pos))
        if r <= 0:
            raise IntegrationError(f"walker reached the wall at t = {t:.4f} s; reduce the time step")
        if abs(r - r_before) > 0.5 * r_before:
            raise IntegrationError(f"step at t = {t:.4f} s moved the walker too far; reduce the time step")
        acc_next = accel(pos, vel)
        vel = vel + 0.5 * (acc + acc_next) * dt
        acc = acc_next
        if constant_speed:
            vel = hold_speed(vel)
            acc = accel(pos, vel)

        if branch == Trajectory.INCOMING and float(vel @ n) >= 0:
            branch = Trajectory.OUTGOING
            turning_time = t
            if regulation is Regulation.TURNAROUND:
                along = float(vel @ tangent)
                direction = 1.0 if along >= 0 else -1.0
                vel = float(vel @ n) * n + direction * acquired * tangent
                acc = accel(pos, vel)
                reference = energy(pos, vel)
            parallel_at_turn = abs(float(vel @ tangent))
            logger.debug("Walker turned at t = {t:.4f} s, r = {r:.4f} mm", t=t, r=r)

        drift = abs(energy(pos, vel) - reference)
        if drift > cfg.energy_tolerance * max(abs(reference), cap * cap):
            raise IntegrationError(
                f"energy drift {drift:.3e} on branch {branch} at t = {t:.4f} s; "
                "reduce the time step"
            )

        leaving = branch == Trajectory.OUTGOING and r >= exit_distance
        if step % cfg.strobe_steps == 0 or leaving:
            records.append((t, pos[0], pos[1], vel[0], vel[1], branch))
        if leaving:
            break
    else:
        logger.info("Walker still near the wall at t_max = {t_max} s", t_max=cfg.t_max)

    data = np.array(records, dtype=np.float64)
    return Trajectory(
        wall=wall,
        t=data[:, 0],
        x=data[:, 1],
        y=data[:, 2],
        vx=data[:, 3],
        vy=data[:, 4],
        branch=data[:, 5].astype(np.int64),
        turning_time=turning_time,
        acquired_parallel_speed=parallel_at_turn,
        incoming_parallel_speed=parallel_at_start,
    )

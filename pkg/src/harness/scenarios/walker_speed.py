# -*- coding: utf-8 -*-
import numpy as np
import pandas as pd
from loguru import logger
from pydantic import Field, model_validator

from pilotwave.bounce import (
    DrivingConfig,
    calibrate_kappa,
    landing_time,
    velocity_law,
    walker_speed,
)

from ..fitting import fit_line
from .base import RunContext, Scenario, ScenarioParams


class WalkerSpeedParams(ScenarioParams):
    """
    Forcing sweep in units of g; κ is calibrated at the latest landing.

    Landing times count from the wave-phase origin, so the sweep may start
    anywhere above the period-doubling onset (about 3.297g). Forcing just above
    the onset lands too early to walk.
    """

    a_m_min: float = Field(default=3.5, gt=1)
    a_m_max: float = Field(default=4.2, gt=1)
    points: int = Field(default=15, ge=3)
    gamma_ref: float = Field(default=2.6, ge=1)

    @model_validator(mode="after")
    def _ordered(self) -> "WalkerSpeedParams":
        if self.a_m_max <= self.a_m_min:
            raise ValueError("a_m_max must exceed a_m_min")
        return self


class WalkerSpeedSweep(Scenario):
    name = "walker_speed_sweep"
    Params = WalkerSpeedParams

    def run(self, ctx: RunContext, params: WalkerSpeedParams) -> Scenario.Result:
        medium = ctx.medium
        ratios = np.linspace(params.a_m_min, params.a_m_max, params.points)
        landings = []
        for ratio in ratios:
            a_m = ratio * medium.g
            cfg = DrivingConfig.period_doubled(a_m, medium)
            landings.append(landing_time(cfg, medium))

        T_ref = max(landings)
        kappa = calibrate_kappa(T_ref, params.gamma_ref)
        rows = []
        for ratio, T in zip(ratios, landings):
            v = walker_speed(T, kappa, medium)
            rows.append(
                {
                    "a_m_over_g": float(ratio),
                    "T_over_tau": T / medium.tau,
                    "v": v,
                    "gamma": medium.gamma(v),
                    "law": velocity_law(v, medium),
                }
            )
        table = pd.DataFrame(rows)
        walking = table[table["v"] > 0]
        fit = fit_line(walking["T_over_tau"], walking["law"])
        gamma_max = float(table["gamma"].max())
        gamma_min = float(walking["gamma"].min())
        logger.info(
            "walker speed law: r² = {r2:.6f}, γ from {lo:.3f} to {hi:.3f}",
            r2=fit.r_squared,
            lo=gamma_min,
            hi=gamma_max,
        )
        return Scenario.Result.ok(
            tables={"walker_speed": table},
            summary={
                "c": medium.c,
                "kappa": kappa,
                "r_squared": fit.r_squared,
                "slope": fit.slope,
                "intercept": fit.intercept,
                "gamma_min": gamma_min,
                "gamma_max": gamma_max,
                "walking_points": int(len(walking)),
            },
        )

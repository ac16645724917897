# -*- coding: utf-8 -*-
import math

import numpy as np
import pandas as pd
from pydantic import Field

from pilotwave.spin import (
    SpinState,
    angular_momentum,
    antisymmetric_pair_field,
    lift_bloch_path,
    pair_boundary_coupling,
    spin_vector,
    superposed_field,
)

from .base import RunContext, Scenario, ScenarioParams

# (β, φ, eigenvector of)
PAULI_ROWS = [
    (math.pi / 2, 0.0, "x"),
    (math.pi / 2, math.pi / 2, "y"),
    (0.0, 0.0, "z"),
]


class SpinTableParams(ScenarioParams):
    alpha_points: int = Field(default=5, ge=2)
    path_points: int = Field(default=65, ge=3)
    pair_speed_fraction: float = Field(default=0.25, ge=0, lt=1)
    alpha1: float = Field(default=0.3, ge=0)


class SpinTables(Scenario):
    name = "spin_tables"
    Params = SpinTableParams

    def run(self, ctx: RunContext, params: SpinTableParams) -> Scenario.Result:
        medium = ctx.medium
        alphas = np.linspace(0.0, math.pi, params.alpha_points)
        angular = pd.DataFrame(
            {
                "alpha": alphas,
                "L_over_L0": [angular_momentum(SpinState.spin_wave(a), 1.0) for a in alphas],
                "a1": [math.cos(a) for a in alphas],
                "a2": [math.sin(a) for a in alphas],
            }
        )

        rows = []
        for beta, phi, axis in PAULI_ROWS:
            state = SpinState.from_bloch(0.0, beta, phi)
            sx, sy, sz = spin_vector(state)
            rows.append(
                {
                    "eigenvector_of": axis,
                    "beta": beta,
                    "phi": phi,
                    "a1_re": state.a1.real,
                    "a1_im": state.a1.imag,
                    "a2_re": state.a2.real,
                    "a2_im": state.a2.imag,
                    "sigma_x": sx,
                    "sigma_y": sy,
                    "sigma_z": sz,
                }
            )
        pauli = pd.DataFrame(rows)

        # one full turn of β: χ comes back negated, the energy proxy stays put
        betas = np.linspace(0.0, 2 * math.pi, params.path_points)
        states = [SpinState.from_bloch(0.0, b, 0.0) for b in betas]
        lifted = lift_bloch_path(states)
        r, theta, t = 1.0 / medium.k_r, 0.3, 0.0
        start, _, _ = superposed_field(states[0], r, theta, t, medium)
        end, _, _ = superposed_field(states[-1], r, theta, t, medium)
        energies = [superposed_field(s, r, theta, t, medium)[2] for s in states]
        path = pd.DataFrame(
            {
                "beta": betas,
                "lifted_beta": [a.beta for a in lifted],
                "energy_proxy": energies,
            }
        )

        v = params.pair_speed_fraction * medium.c
        alpha2 = pair_boundary_coupling(v, params.alpha1, medium)
        exchange = _exchange_error(medium)

        return Scenario.Result.ok(
            tables={"angular_momentum": angular, "pauli": pauli, "bloch_path": path},
            summary={
                "L_over_L0": angular["L_over_L0"].round(12).tolist(),
                "pauli_vectors": pauli[["sigma_x", "sigma_y", "sigma_z"]].round(12).values.tolist(),
                "sign_reversal_error": float(abs(end + start)),
                "energy_proxy_spread": float(np.ptp(energies)),
                "lifted_beta_end": lifted[-1].beta,
                "alpha2": alpha2,
                "exchange_antisymmetry_error": exchange,
            },
        )


def _exchange_error(medium) -> float:
    """max |ξ(x; a, b) + ξ(x; b, a)| over a small grid."""
    state = SpinState.from_bloch(0.0, math.pi / 3, 0.7)

    def xi_a(x, y, t):
        return superposed_field(state, np.hypot(x, y), np.arctan2(y, x), t, medium)[0]

    xs, ys = np.meshgrid(np.linspace(-2.0, 3.0, 11), np.linspace(-1.5, 1.5, 7))
    d = (1.2, 0.4)
    forward = antisymmetric_pair_field(xi_a, d, (xs, ys), 0.01)
    swapped = antisymmetric_pair_field(xi_a, (-d[0], -d[1]), (xs, ys), 0.01, origin=d)
    return float(np.max(np.abs(forward + swapped)))

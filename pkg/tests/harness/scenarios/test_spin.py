# -*- coding: utf-8 -*-
import math

from hamcrest import assert_that, close_to, equal_to, less_than

from harness.scenarios.base import RunContext
from harness.scenarios.spin import SpinTables


def test_spin_tables(ctx: RunContext):
    scenario = SpinTables()
    result = scenario.run(ctx, scenario.parse({}))
    summary = result.summary

    expected_L = [math.cos(2 * a) for a in (0.0, math.pi / 4, math.pi / 2, 3 * math.pi / 4, math.pi)]
    for got, want in zip(summary["L_over_L0"], expected_L):
        assert_that(got, close_to(want, 1e-9))

    for got, want in zip(summary["pauli_vectors"], ([1, 0, 0], [0, 1, 0], [0, 0, 1])):
        for g, w in zip(got, want):
            assert_that(g, close_to(w, 1e-9))

    assert_that(summary["sign_reversal_error"], less_than(1e-12))
    assert_that(summary["energy_proxy_spread"], less_than(1e-12))
    assert_that(summary["lifted_beta_end"], close_to(2 * math.pi, 1e-9))
    assert_that(summary["alpha2"], close_to(0.01875, 1e-12))
    assert_that(summary["exchange_antisymmetry_error"], less_than(1e-12))
    assert_that(sorted(result.tables), equal_to(["angular_momentum", "bloch_path", "pauli"]))

# -*- coding: utf-8 -*-
import math

from hamcrest import assert_that, close_to, equal_to, greater_than_or_equal_to, less_than

from common.errors import DomainError
from harness.scenarios.base import RunContext
from harness.scenarios.reflection import BoundaryReflection


def test_magnetic_term_reduces_the_slope_near_the_turn(ctx: RunContext):
    scenario = BoundaryReflection()
    result = scenario.run(ctx, scenario.parse({}))
    summary = result.summary
    c = ctx.medium.c
    speed = c * math.sqrt(1 - 14.0 / 18.0)
    assert_that(summary["c"], equal_to(c))
    assert_that(summary["free_speed"], close_to(speed, 1e-12))
    assert_that(summary["incoming_r_squared"], greater_than_or_equal_to(0.99))
    assert_that(summary["outgoing_r_squared"], greater_than_or_equal_to(0.99))
    assert_that(summary["v0_relative_error"], less_than(0.01))
    assert_that(summary["max_speed_deviation"], less_than(1e-9))
    assert_that(summary["parallel_speed_at_turn"], close_to(speed, 0.01 * speed))
    assert_that(summary["expected_slope_ratio"], close_to(14.0 / 18.0, 1e-12))
    assert_that(
        summary["slope_ratio"],
        close_to(summary["expected_slope_ratio"], 0.02 * summary["expected_slope_ratio"]),
    )
    assert_that(summary["inferred_v_over_c"], close_to(0.4714, 0.02))
    assert_that(summary["reference_v_over_c"], close_to(0.4714, 1e-3))

    table = result.tables["reflection"]
    assert_that(sorted(table["run"].unique()), equal_to(["magnetic", "plain"]))
    assert_that(float(table["r"].min()) > 0, equal_to(True))


def test_explicit_speed_sets_the_expected_ratio(ctx: RunContext):
    scenario = BoundaryReflection()
    result = scenario.run(ctx, scenario.parse({"speed": 6.0}))
    assert_that(result.summary["expected_slope_ratio"], close_to(1 - (6.0 / ctx.medium.c) ** 2, 1e-12))


def test_speed_must_stay_below_the_wave_speed(ctx: RunContext):
    scenario = BoundaryReflection()
    try:
        scenario.run(ctx, scenario.parse({"speed": 2 * ctx.medium.c}))
        assert False, "expected DomainError"
    except DomainError:
        pass

# -*- coding: utf-8 -*-
import numpy as np
from hamcrest import assert_that, close_to, equal_to

from harness.scenarios.base import RunContext, Scenario
from harness.scenarios.rotating_bath import RotatingBathDemo


def test_orbits_are_plot_data_only(ctx: RunContext):
    scenario = RotatingBathDemo()
    result = scenario.run(ctx, scenario.parse({}))
    assert_that(result.kind, equal_to(Scenario.Kind.QUALITATIVE))
    assert_that(result.detail is not None, equal_to(True))

    radii = result.tables["orbit_radii"]
    v = result.summary["walker_speed"]
    assert_that(v, close_to(0.5 * ctx.medium.c, 1e-12))
    assert_that(np.allclose(radii["orbit_radius"] * 2 * radii["bath_omega"], v), equal_to(True))

    orbit = result.tables["orbit"]
    assert_that(len(orbit), equal_to(73))
    # closed circle of radius R through the origin
    radius = float(radii["orbit_radius"].iloc[0])
    distance = np.hypot(orbit["x"], orbit["y"] - radius)
    assert_that(float(np.max(np.abs(distance - radius))), close_to(0.0, 1e-12))

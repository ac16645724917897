# -*- coding: utf-8 -*-
from hamcrest import assert_that, close_to, equal_to, greater_than, less_than

from common.errors import DomainError
from harness.scenarios.base import RunContext
from harness.scenarios.pairs import OrbitingPair, PairAlignmentTorque


def test_orbiting_pair(ctx: RunContext):
    scenario = OrbitingPair()
    result = scenario.run(ctx, scenario.parse({}))
    comparison = result.tables["factored_vs_exact"]
    # at Ω = 0 both forms are the same standing dipole
    assert_that(float(comparison["relative_difference"].iloc[0]), less_than(1e-12))
    assert_that(float(comparison["node_line_max"].max()), less_than(1e-9 * ctx.medium.h0))
    assert_that(result.summary["circulation_sign"], equal_to({"1": 1, "-1": -1}))
    for slope in result.summary["circulation_slope"].values():
        assert_that(slope, close_to(-1.0, 0.05))

    overlaps = result.tables["mode_overlap"].set_index(["m", "n"])["overlap"]
    assert_that(float(overlaps[(0, 1)]), close_to(0.0, 1e-12))


def test_pairs_turn_towards_antiparallel(ctx: RunContext):
    scenario = PairAlignmentTorque()
    result = scenario.run(ctx, scenario.parse({}))
    assert_that(result.summary["torque_at_90_deg"], greater_than(0.0))
    assert_that(result.summary["turns_towards"], equal_to("antiparallel"))
    torque = result.tables["torque"].set_index("orientation_deg")["torque"]
    assert_that(float(torque[0.0]), close_to(0.0, 1e-12 * abs(result.summary["torque_at_90_deg"])))


def test_overlapping_pairs(ctx: RunContext):
    scenario = PairAlignmentTorque()
    try:
        scenario.run(ctx, scenario.parse({"separation": 1.5}))
        assert False, "expected DomainError"
    except DomainError:
        pass

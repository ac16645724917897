# -*- coding: utf-8 -*-
import math

import numpy as np
from hamcrest import assert_that, close_to, equal_to, greater_than, is_, less_than

from common.errors import DomainError, RegimeError
from common.params import MediumParams
from pilotwave.bounce import (
    PERIOD_DOUBLING_ONSET,
    SMALL_ANGLE_LIMIT,
    WAVE_ORIGIN_PHASE,
    DrivingConfig,
    WalkerState,
    calibrate_kappa,
    equilibrium_offset,
    landing_instant,
    landing_time,
    parametric_gain_sign,
    velocity_law,
    walker_speed,
)
from ..test_lib.oracles import landing_time_by_stepping, offset_by_root


def _circular_difference(a: float, b: float, period: float) -> float:
    return abs((a - b + 0.5 * period) % period - 0.5 * period)


def test_drive_amplitude(medium: MediumParams):
    cfg = DrivingConfig.period_doubled(4.0 * medium.g, medium)
    assert_that(cfg.drive_angular_frequency, close_to(2 * medium.omega0, 1e-12))
    assert_that(cfg.drive_amplitude, close_to(4.0 * medium.g / (2 * medium.omega0) ** 2, 1e-15))


def test_landing_instant_matches_time_stepping(medium: MediumParams):
    for ratio in (3.5, 3.8, 4.2):
        for phase0 in (0.0, 1.1):
            cfg = DrivingConfig.period_doubled(ratio * medium.g, medium, phase0=phase0)
            t_land = landing_instant(cfg, medium)
            reference = landing_time_by_stepping(ratio, medium, phase0=phase0)
            assert_that(t_land, greater_than(-1e-15))
            assert_that(t_land, less_than(medium.tau))
            assert_that(_circular_difference(t_land, reference, medium.tau), less_than(1e-4 * medium.tau))


def test_landing_time_counts_from_the_wave_origin(medium: MediumParams):
    drive = 2 * medium.omega0
    for ratio in (3.5, 3.8, 4.2):
        for phase0 in (0.0, 1.1):
            cfg = DrivingConfig.period_doubled(ratio * medium.g, medium, phase0=phase0)
            origin = (WAVE_ORIGIN_PHASE - phase0) / drive
            expected = (landing_time_by_stepping(ratio, medium, phase0=phase0) - origin) % medium.tau
            T = landing_time(cfg, medium)
            assert_that(_circular_difference(T, expected, medium.tau), less_than(1e-4 * medium.tau))
            assert_that(T, less_than(SMALL_ANGLE_LIMIT * medium.tau))


def test_landing_time_ignores_the_drive_phase(medium: MediumParams):
    base = DrivingConfig.period_doubled(3.8 * medium.g, medium)
    shift = 0.3
    shifted = DrivingConfig.period_doubled(3.8 * medium.g, medium, phase0=shift)
    assert_that(landing_time(shifted, medium), close_to(landing_time(base, medium), 1e-12))
    expected = (landing_instant(base, medium) - shift / (2 * medium.omega0)) % medium.tau
    assert_that(_circular_difference(landing_instant(shifted, medium), expected, medium.tau), less_than(1e-12))


def test_landing_time_grows_with_the_driving(medium: MediumParams):
    ratios = np.linspace(3.3, 4.2, 10)
    times = [landing_time(DrivingConfig.period_doubled(r * medium.g, medium), medium) for r in ratios]
    assert_that(bool(np.all(np.diff(times) > 0)), is_(True))
    assert_that(times[0], less_than(1e-3 * medium.tau))
    assert_that(times[-1], close_to(0.078 * medium.tau, 0.01 * medium.tau))


def test_period_doubling_edge(medium: MediumParams):
    assert_that(PERIOD_DOUBLING_ONSET, close_to(3.2969, 1e-4))
    just_above = landing_time(DrivingConfig.period_doubled(3.30 * medium.g, medium), medium)
    assert_that(just_above, greater_than(0.0))
    assert_that(just_above, less_than(5e-4 * medium.tau))
    try:
        landing_time(DrivingConfig.period_doubled(3.29 * medium.g, medium), medium)
        assert False, "expected RegimeError"
    except RegimeError:
        pass


def test_offset_follows_landing_across_the_walking_range(medium: MediumParams):
    top = landing_time(DrivingConfig.period_doubled(4.2 * medium.g, medium), medium)
    kappa = calibrate_kappa(top, 2.6)
    for ratio in np.linspace(3.3, 4.2, 10):
        T = landing_time(DrivingConfig.period_doubled(ratio * medium.g, medium), medium)
        v = walker_speed(T, kappa, medium)
        offset = equilibrium_offset(T, v, medium)
        assert_that(offset, greater_than(-1e-15))
        if v > 0:
            assert_that(offset, greater_than(0.0))


def test_walking_onset(medium: MediumParams):
    top = landing_time(DrivingConfig.period_doubled(4.2 * medium.g, medium), medium)
    kappa = calibrate_kappa(top, 2.6)
    below = landing_time(DrivingConfig.period_doubled(3.3 * medium.g, medium), medium)
    above = landing_time(DrivingConfig.period_doubled(3.5 * medium.g, medium), medium)
    assert_that(walker_speed(below, kappa, medium), equal_to(0.0))
    assert_that(walker_speed(above, kappa, medium), greater_than(0.0))
    assert_that(medium.gamma(walker_speed(top, kappa, medium)), close_to(2.6, 1e-9))


def test_weak_driving_never_takes_off(medium: MediumParams):
    try:
        landing_time(DrivingConfig.period_doubled(0.9 * medium.g, medium), medium)
        assert False, "expected RegimeError"
    except RegimeError:
        pass


def test_strong_driving_leaves_period_doubling(medium: MediumParams):
    try:
        landing_time(DrivingConfig.period_doubled(7.0 * medium.g, medium), medium)
        assert False, "expected RegimeError"
    except RegimeError:
        pass


def test_only_period_doubled_driving(medium: MediumParams):
    cfg = DrivingConfig(a_m=4.0 * medium.g, drive_angular_frequency=medium.omega0)
    try:
        landing_time(cfg, medium)
        assert False, "expected DomainError"
    except DomainError:
        pass


def test_parametric_gain_sign(medium: MediumParams):
    assert_that(parametric_gain_sign(4.0 * medium.g, medium.g), less_than(0.0))
    assert_that(parametric_gain_sign(2.0 * medium.g, medium.g), greater_than(0.0))
    assert_that(parametric_gain_sign(3.0 * medium.g, medium.g), close_to(0.0, 1e-9))


def test_walker_speed_solves_the_law(medium: MediumParams):
    kappa = calibrate_kappa(0.01, 2.6)
    for T in (0.002, 0.005, 0.01):
        v = walker_speed(T, kappa, medium)
        assert_that(v, less_than(medium.c))
        assert_that(velocity_law(v, medium), close_to(kappa * T, 1e-9 * kappa * T))


def test_calibration_point_has_the_reference_gamma(medium: MediumParams):
    kappa = calibrate_kappa(0.01, 2.6)
    v = walker_speed(0.01, kappa, medium)
    assert_that(medium.gamma(v), close_to(2.6, 1e-12))


def test_slow_landing_does_not_walk(medium: MediumParams):
    kappa = calibrate_kappa(0.01, 2.6)
    assert_that(walker_speed(0.4 / kappa, kappa, medium), equal_to(0.0))
    assert_that(walker_speed(0.499 / kappa, kappa, medium), equal_to(0.0))


def test_calibration_domain():
    for T_ref, gamma_ref in ((0.01, 0.9), (0.0, 2.0), (-1.0, 2.0)):
        try:
            calibrate_kappa(T_ref, gamma_ref)
            assert False, "expected DomainError"
        except DomainError:
            pass


def test_equilibrium_offset_matches_the_slope_root(medium: MediumParams):
    for fraction in (0.1, 0.2, 0.3):
        v = fraction * medium.c
        for T_fraction in (0.005, 0.01, 0.02):
            T = T_fraction * medium.tau
            offset = equilibrium_offset(T, v, medium)
            root = offset_by_root(T, v, medium)
            assert_that(offset, close_to(root, 0.02 * root))


def test_equilibrium_offset_without_small_angles(medium: MediumParams):
    T = 0.02 * medium.tau
    v = 0.2 * medium.c
    small = equilibrium_offset(T, v, medium)
    full = equilibrium_offset(T, v, medium, small_angle=False)
    ratio = math.tan(medium.omega0 * T) / (medium.omega0 * T)
    assert_that(full / small, close_to(ratio, 1e-12))


def test_no_offset_without_convexity(medium: MediumParams):
    try:
        equilibrium_offset(0.3 * medium.tau, 0.1 * medium.c, medium)
        assert False, "expected RegimeError"
    except RegimeError:
        pass


def test_walker_state_checks(medium: MediumParams):
    state = WalkerState(velocity=(3.0, 4.0), T=0.01, speed_cap=5.0)
    assert_that(state.speed, close_to(5.0, 1e-15))
    assert_that(state.validate_against(medium), equal_to(state))
    for bad in (
        WalkerState(T=medium.tau),
        WalkerState(velocity=(medium.c, 0.0)),
    ):
        try:
            bad.validate_against(medium)
            assert False, "expected DomainError"
        except DomainError:
            pass

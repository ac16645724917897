# -*- coding: utf-8 -*-
import math

import numpy as np
from hamcrest import assert_that, close_to, equal_to, greater_than, less_than
from scipy.stats import linregress

from common.errors import DomainError, SingularityError
from common.params import MediumParams
from pilotwave.forces import (
    ForceConstants,
    Geometry,
    Oscillator,
    bubble_flow_amplitude,
    conventional_constants,
    droplet_acceleration,
    droplet_flow_rate,
    inverse_square_force,
    laplace_residual,
    magnetic_factor,
    pair_force,
    pair_force_vector,
    radial_flow_speed,
    speed_from_slope_ratio,
)

RHO0 = 0.95e-3
OMEGA = 2 * math.pi * 25.0


def _bubble(Q: float, phase: float = 0.0, position=(0.0, 0.0)) -> Oscillator:
    return Oscillator(position=position, Q_amp=Q, phase=phase, frequency=OMEGA)


def test_cycle_average_matches_quadrature():
    a, b = _bubble(3.0, 0.2), _bubble(2.0, 1.1)
    r = 4.0
    times = np.arange(4096) * (2 * math.pi / OMEGA) / 4096
    q1 = a.Q_amp * np.cos(OMEGA * times + a.phase)
    q2 = b.Q_amp * np.cos(OMEGA * times + b.phase)
    for geometry in Geometry:
        u = np.array([radial_flow_speed(q, r, geometry) for q in q1])
        # the inflow towards a source pulls the ingesting one in
        quadrature = -RHO0 * float(np.mean(u * q2))
        assert_that(pair_force(a, b, RHO0, r, geometry), close_to(quadrature, 0.01 * abs(quadrature)))


def test_inverse_square_slope():
    a, b = _bubble(1.0), _bubble(1.0)
    r = np.geomspace(0.5, 50.0, 20)
    forces = [pair_force(a, b, RHO0, x) for x in r]
    fit = linregress(np.log(r), np.log(forces))
    assert_that(fit.slope, close_to(-2.0, 1e-3))


def test_antiphase_repels():
    a = _bubble(1.5)
    in_phase = pair_force(a, _bubble(2.0), RHO0, 3.0)
    antiphase = pair_force(a, _bubble(2.0, math.pi), RHO0, 3.0)
    assert_that(in_phase, greater_than(0.0))
    assert_that(antiphase, close_to(-in_phase, 1e-15 * in_phase))


def test_hemisphere_doubles_the_force():
    a, b = _bubble(1.0), _bubble(1.0)
    full = pair_force(a, b, RHO0, 2.0, Geometry.FULL_SPHERE)
    half = pair_force(a, b, RHO0, 2.0, Geometry.HEMISPHERE)
    assert_that(half, close_to(2 * full, 1e-15))
    assert_that(radial_flow_speed(1.0, 1.0, Geometry.HEMISPHERE), close_to(-1 / (2 * math.pi), 1e-15))


def test_force_vector_points_at_an_in_phase_partner():
    a = _bubble(1.0, position=(0.0, 0.0))
    b = _bubble(1.0, position=(3.0, 4.0))
    fx, fy = pair_force_vector(a, b, RHO0)
    magnitude = pair_force(a, b, RHO0, 5.0)
    assert_that(fx, close_to(0.6 * magnitude, 1e-15))
    assert_that(fy, close_to(0.8 * magnitude, 1e-15))


def test_singular_and_mismatched_pairs():
    a = _bubble(1.0)
    try:
        pair_force(a, a, RHO0, 0.0)
        assert False, "expected SingularityError"
    except SingularityError:
        pass
    try:
        pair_force(a, Oscillator(Q_amp=1.0, frequency=2 * OMEGA), RHO0, 1.0)
        assert False, "expected DomainError"
    except DomainError:
        pass


def test_conventional_constants_reproduce_the_bubble_force(medium: MediumParams):
    A, r0 = 0.05, 0.3
    consts = conventional_constants(A, r0, OMEGA, medium)
    Q = bubble_flow_amplitude(A, r0, OMEGA)
    for r in (1.0, 2.5, 10.0):
        expected = pair_force(_bubble(Q), _bubble(Q), medium.rho0, r)
        assert_that(inverse_square_force(consts, r), close_to(expected, 1e-12 * expected))


def test_force_constants_tie_bbar_to_the_mass():
    consts = ForceConstants.for_mass(3.65, 1.0, OMEGA, 38.2)
    assert_that(consts.bbar, close_to(38.2**2 / OMEGA, 1e-12))
    try:
        ForceConstants(alpha=1.0, bbar=1.0, m_eff=1.0, omega=OMEGA, c=38.2)
        assert False, "expected ValueError"
    except ValueError:
        pass


def test_droplet_flow():
    assert_that(droplet_flow_rate(2.0, 50.0, 0.5), equal_to(50.0))
    assert_that(droplet_acceleration(1.0, 1.0, 1.0, 1.0), close_to(1 / (4 * math.pi), 1e-15))
    try:
        droplet_flow_rate(-1.0, 50.0, 0.5)
        assert False, "expected DomainError"
    except DomainError:
        pass


def test_magnetic_factor(medium: MediumParams):
    assert_that(magnetic_factor(0.5 * medium.c, medium), close_to(0.75, 1e-14))
    assert_that(speed_from_slope_ratio(14.0 / 18.0), close_to(0.471, 1e-3))
    assert_that(speed_from_slope_ratio(magnetic_factor(0.3 * medium.c, medium)), close_to(0.3, 1e-12))
    for ratio in (0.0, 1.5):
        try:
            speed_from_slope_ratio(ratio)
            assert False, "expected DomainError"
        except DomainError:
            pass


def test_flow_potential_is_harmonic():
    sources = [_bubble(1.0, position=(0.0, 0.0)), _bubble(2.0, math.pi / 3, position=(2.0, 0.0))]
    coarse = laplace_residual(sources, (-1.0, -1.0, 1.0), (3.0, 1.0, 2.0), 0.1)
    fine = laplace_residual(sources, (-1.0, -1.0, 1.0), (3.0, 1.0, 2.0), 0.05)
    assert_that(coarse / fine, greater_than(3.5))
    assert_that(coarse / fine, less_than(4.5))

# -*- coding: utf-8 -*-
import math

import numpy as np
from hamcrest import assert_that, close_to, equal_to, less_than, none

from common.errors import DomainError
from common.params import MediumParams
from pilotwave.quantum.pilot import (
    PilotWaveParams,
    SlitKind,
    de_broglie_wavelength,
    double_slit_first_minimum,
    energy_momentum,
    far_field_intensity,
    gaussian_packet,
    packet_width,
    pilot_wavenumber,
    single_slit_first_minimum,
)

from ...test_lib.oracles import gaussian_width


def test_dispersion_relation(droplet_pilot: PilotWaveParams):
    for fraction in (0.0, 0.2, 0.7):
        k, omega = pilot_wavenumber(fraction * droplet_pilot.c, droplet_pilot)
        lhs = omega**2 - droplet_pilot.c**2 * k**2
        assert_that(lhs, close_to(droplet_pilot.omega0**2, 1e-12 * droplet_pilot.omega0**2))


def test_energy_momentum_shell(droplet_pilot: PilotWaveParams):
    E, p = energy_momentum(0.4 * droplet_pilot.c, droplet_pilot)
    rest = droplet_pilot.rest_energy
    assert_that(E**2 - (p * droplet_pilot.c) ** 2, close_to(rest**2, 1e-12 * rest**2))


def test_de_broglie_wavelength(natural: PilotWaveParams):
    v = 0.6
    _, p = energy_momentum(v, natural)
    assert_that(de_broglie_wavelength(v, natural), close_to(2 * math.pi * natural.bbar / p, 1e-12))
    assert_that(de_broglie_wavelength(-v, natural), close_to(de_broglie_wavelength(v, natural), 1e-15))
    assert_that(de_broglie_wavelength(0.0, natural), equal_to(math.inf))


def test_params_tie_bbar_to_the_rest_energy(medium: MediumParams):
    pilot = PilotWaveParams.from_medium(medium, m0=2e-3)
    assert_that(pilot.bbar * pilot.omega0, close_to(pilot.m0 * pilot.c**2, 1e-15))
    assert_that(pilot.diffusivity, close_to(medium.c**2 / medium.omega0, 1e-12))
    for kwargs in (
        dict(bbar=2.0, m0=1.0, omega0=1.0, c=1.0),
        dict(bbar=1.0, m0=0.0, omega0=1.0, c=1.0),
    ):
        try:
            PilotWaveParams(**kwargs)
            assert False, "expected DomainError"
        except DomainError:
            pass


def test_potential_lowers_the_local_energy():
    pilot = PilotWaveParams.natural(potential=lambda x: 0.25 * x)
    x = np.array([0.0, 1.0, 2.0])
    assert_that(pilot.potential_on(x).tolist(), equal_to([0.0, 0.25, 0.5]))
    assert_that(float(pilot.energy(0.25)), close_to(0.75, 1e-15))
    assert_that(PilotWaveParams.natural().potential_on(x).tolist(), equal_to([0.0, 0.0, 0.0]))


def test_slit_minima():
    assert_that(single_slit_first_minimum(7.3, 14.8), close_to(29.6, 0.1))
    assert_that(double_slit_first_minimum(7.3, 14.3), close_to(14.8, 0.1))
    assert_that(single_slit_first_minimum(20.0, 14.8), none())
    assert_that(double_slit_first_minimum(40.0, 14.3), none())
    for lam, L in ((0.0, 1.0), (1.0, -1.0)):
        try:
            single_slit_first_minimum(lam, L)
            assert False, "expected DomainError"
        except DomainError:
            pass


def test_far_field_vanishes_at_the_minima():
    single = far_field_intensity(SlitKind.SINGLE, 7.3, 14.8, 0.0, [0.0, single_slit_first_minimum(7.3, 14.8)])
    assert_that(single[0], close_to(1.0, 1e-15))
    assert_that(single[1], close_to(0.0, 1e-20))
    double = far_field_intensity(SlitKind.DOUBLE, 7.3, 4.0, 14.3, [0.0, double_slit_first_minimum(7.3, 14.3)])
    assert_that(double[0], close_to(1.0, 1e-15))
    assert_that(double[1], close_to(0.0, 1e-15))


def test_gaussian_packet_moves_and_spreads(natural: PilotWaveParams):
    x = np.linspace(-80.0, 120.0, 8001)
    dx = x[1] - x[0]
    t = 20.0
    psi = gaussian_packet(x, t, 2.0, 1.5, -10.0, natural)
    density = np.abs(psi) ** 2
    assert_that(float(np.sum(density) * dx), close_to(1.0, 1e-9))
    centre = float(np.sum(x * density) / np.sum(density))
    assert_that(centre, close_to(-10.0 + 1.5 * t, 1e-6))
    assert_that(gaussian_width(x, density), close_to(packet_width(t, 2.0, natural), 1e-6))


def test_gaussian_packet_needs_a_width(natural: PilotWaveParams):
    try:
        gaussian_packet(np.zeros(3), 0.0, 0.0, 1.0, 0.0, natural)
        assert False, "expected DomainError"
    except DomainError:
        pass


def test_packet_width_at_rest(natural: PilotWaveParams):
    assert_that(packet_width(0.0, 2.0, natural), equal_to(2.0))
    assert_that(packet_width(10.0, 2.0, natural), close_to(3.2016, 1e-4))
    assert_that(abs(packet_width(10.0, 2.0, natural) - 2.0 * math.sqrt(2.5625)), less_than(1e-12))

# -*- coding: utf-8 -*-
import math

import numpy as np
import pytest
from hamcrest import assert_that, close_to, equal_to, is_, less_than
from scipy.stats import ks_2samp

from common.errors import DomainError, NodeError
from common.rng import Stream
from pilotwave.quantum.bohm import (
    BohmEnsemble,
    GuidanceField,
    bohm_velocities,
    bohm_velocity,
    phase_gradient,
    sample_density,
)
from pilotwave.quantum.field import Boundary, ComplexField
from pilotwave.quantum.pilot import PilotWaveParams, gaussian_packet, packet_width


def _packet_field(params: PilotWaveParams, k0: float, length: float = 100.0, n: int = 512) -> ComplexField:
    dx = length / n
    x = -length / 2 + dx * np.arange(n)
    samples = gaussian_packet(x, 0.0, 2.0, k0, 0.0, params)
    return ComplexField.on_grid(samples, -length / 2, dx, 0.01, boundary=Boundary.PERIODIC)


def test_plane_wave_guides_at_the_group_velocity(droplet_pilot: PilotWaveParams):
    dx = 0.01
    x = dx * np.arange(200)
    k = 3.0
    psi = ComplexField.on_grid(np.exp(1j * k * x), 0.0, dx, 1e-6)
    (v,) = bohm_velocity(psi, 0.537, droplet_pilot)
    assert_that(v, close_to(droplet_pilot.diffusivity * k, 1e-9 * droplet_pilot.diffusivity * k))


def test_two_dimensional_guidance(natural: PilotWaveParams):
    dx = 0.1
    X, Y = np.meshgrid(dx * np.arange(40), dx * np.arange(30), indexing="ij")
    psi = ComplexField.on_grid(np.exp(1j * (0.7 * X - 0.4 * Y)), (0.0, 0.0), dx, 0.01)
    vx, vy = bohm_velocity(psi, (1.23, 2.07), natural)
    assert_that(vx, close_to(0.7, 1e-9))
    assert_that(vy, close_to(-0.4, 1e-9))


def test_phase_gradient_next_to_a_wall(natural: PilotWaveParams):
    dx = 0.1
    k = 2.0
    samples = np.exp(1j * k * dx * np.arange(20))
    samples[10] = 0.0
    (g,) = phase_gradient(ComplexField.on_grid(samples, 0.0, dx, 0.01))
    assert_that(float(g[9]), close_to(k, 1e-9))
    assert_that(float(g[11]), close_to(k, 1e-9))
    assert_that(float(g[5]), close_to(k, 1e-9))


def test_guidance_field_matches_one_off_lookups(natural: PilotWaveParams):
    dx = 0.1
    X, Y = np.meshgrid(dx * np.arange(40), dx * np.arange(30), indexing="ij")
    psi = ComplexField.on_grid(np.exp(1j * (0.7 * X - 0.4 * Y)) * (1.0 + X), (0.0, 0.0), dx, 0.01)
    points = np.array([[1.23, 2.07], [0.5, 0.5], [3.8, 2.8]])
    guide = GuidanceField(psi, natural)
    velocity, nodes = guide.velocities(points)
    expected, expected_nodes = bohm_velocities(psi, points, natural)
    assert_that(np.array_equal(velocity, expected), is_(True))
    assert_that(nodes.tolist(), equal_to(expected_nodes.tolist()))
    assert_that(guide.contains(np.array([[0.0, 0.0], [4.0, 1.0]])).tolist(), equal_to([True, False]))
    try:
        guide.velocities(np.array([[4.0, 1.0]]))
        assert False, "expected DomainError"
    except DomainError:
        pass


def test_velocity_is_undefined_at_a_node(natural: PilotWaveParams):
    dx = 0.1
    x = -1.0 + dx * np.arange(21)
    psi = ComplexField.on_grid(x.astype(np.complex128), -1.0, dx, 0.01)
    try:
        bohm_velocity(psi, 0.0, natural)
        assert False, "expected NodeError"
    except NodeError:
        pass
    _, nodes = bohm_velocities(psi, np.array([[0.0], [0.5]]), natural)
    assert_that(nodes.tolist(), equal_to([True, False]))


def test_guidance_outside_the_grid(natural: PilotWaveParams):
    psi = _packet_field(natural, 0.5)
    try:
        bohm_velocity(psi, 60.0, natural)
        assert False, "expected DomainError"
    except DomainError:
        pass


def test_density_samples_are_reproducible(natural: PilotWaveParams):
    psi = _packet_field(natural, 0.5)
    first = sample_density(psi, 9, 500)
    again = sample_density(psi, 9, 500)
    other = sample_density(psi, 10, 500)
    assert_that(np.array_equal(first, again), is_(True))
    assert_that(np.array_equal(first, other), is_(False))
    assert_that(first.shape, equal_to((500, 1)))
    assert_that(float(np.mean(first)), close_to(0.0, 0.3))
    assert_that(float(np.std(first)), close_to(2.0, 0.2))


def test_free_packet_trajectories_scale_with_the_width(natural: PilotWaveParams):
    psi = _packet_field(natural, 0.0)
    ensemble = BohmEnsemble.sample(psi, natural, 50, seed=5, record=True)
    starts = ensemble.positions[:, 0].copy()
    final = ensemble.follow(psi, natural, 500)
    stretch = packet_width(final.t, 2.0, natural) / 2.0
    error = np.max(np.abs(ensemble.positions[:, 0] - stretch * starts))
    assert_that(float(error), less_than(1e-3))

    path = ensemble.trajectory(7)
    assert_that(path.positions.shape, equal_to((501, 1)))
    assert_that(path.seed, equal_to(5))
    assert_that(path.weight, close_to(float(np.abs(gaussian_packet(starts[7], 0.0, 2.0, 0.0, 0.0, natural)) ** 2), 1e-3))


def test_trajectories_need_recording(natural: PilotWaveParams):
    ensemble = BohmEnsemble.sample(_packet_field(natural, 0.5), natural, 10, seed=1)
    try:
        ensemble.trajectory(0)
        assert False, "expected DomainError"
    except DomainError:
        pass


@pytest.mark.integration
def test_ensemble_stays_distributed_as_the_density(natural: PilotWaveParams):
    psi = _packet_field(natural, 0.5)
    ensemble = BohmEnsemble.sample(psi, natural, 10_000, seed=3)
    final = ensemble.follow(psi, natural, 500)
    fresh = sample_density(final, 3, 10_000, stream=Stream.FRESH_SAMPLES)
    statistic = ks_2samp(ensemble.positions[:, 0], fresh[:, 0]).statistic
    assert_that(statistic, less_than(0.03))
    # the packet centre moved with the group velocity
    assert_that(float(np.mean(ensemble.positions[:, 0])), close_to(0.5 * final.t, 0.1))
    assert_that(math.isclose(final.t, 5.0, rel_tol=1e-9), is_(True))

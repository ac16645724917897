# -*- coding: utf-8 -*-
from pathlib import Path

import numpy as np
from hamcrest import assert_that, close_to, equal_to, is_

from common.errors import DomainError
from pilotwave.quantum.field import Boundary, ComplexField, read_snapshot, write_snapshot


def _field_2d() -> ComplexField:
    rng = np.random.default_rng(4)
    samples = rng.normal(size=(6, 5)) + 1j * rng.normal(size=(6, 5))
    return ComplexField.on_grid(samples, (-1.0, 2.0), 0.25, 0.01, boundary=Boundary.ABSORBING, t=0.37)


def test_coordinates_follow_the_origin():
    psi = _field_2d()
    X, Y = psi.coords()
    assert_that(X.shape, equal_to((6, 5)))
    assert_that(float(X[5, 0]), close_to(0.25, 1e-15))
    assert_that(float(Y[0, 4]), close_to(3.0, 1e-15))
    assert_that(psi.cell, close_to(0.0625, 1e-15))


def test_normalized_has_unit_norm():
    psi = _field_2d().normalized()
    assert_that(psi.norm(), close_to(1.0, 1e-12))


def test_with_samples_keeps_the_grid():
    psi = _field_2d()
    later = psi.with_samples(np.zeros((6, 5), dtype=np.complex128), t=1.0)
    assert_that(later.origin, equal_to(psi.origin))
    assert_that(later.t, equal_to(1.0))
    assert_that(later.boundary, equal_to(Boundary.ABSORBING))


def test_zero_field_cannot_be_normalised():
    psi = ComplexField.on_grid(np.zeros(8), 0.0, 0.1, 0.01)
    try:
        psi.normalized()
        assert False, "expected DomainError"
    except DomainError:
        pass


def test_grid_validation():
    for kwargs in (
        dict(samples=np.zeros((3, 3, 3)), dx=0.1, dt=0.1, origin=(0.0, 0.0, 0.0)),
        dict(samples=np.zeros(2), dx=0.1, dt=0.1),
        dict(samples=np.zeros(5), dx=0.0, dt=0.1),
        dict(samples=np.zeros((4, 4)), dx=0.1, dt=0.1, origin=(0.0,)),
    ):
        try:
            ComplexField(**kwargs)
            assert False, "expected DomainError"
        except DomainError:
            pass


def test_snapshot_roundtrip(tmp_path: Path):
    psi = _field_2d()
    data, header = write_snapshot(psi, tmp_path / "snaps" / "step_000010")
    assert_that(data.name, equal_to("step_000010.bin"))
    assert_that(data.stat().st_size, equal_to(6 * 5 * 16))
    lines = header.read_text(encoding="utf-8").splitlines()
    assert_that(lines[0], equal_to("dims = 6 5"))
    assert_that(lines[-1], equal_to("boundary = absorbing"))

    loaded = read_snapshot(tmp_path / "snaps" / "step_000010")
    assert_that(np.array_equal(loaded.samples, psi.samples), is_(True))
    assert_that(loaded.origin, equal_to(psi.origin))
    assert_that(loaded.dx, equal_to(psi.dx))
    assert_that(loaded.t, equal_to(psi.t))

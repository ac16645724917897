# -*- coding: utf-8 -*-
import os

import pytest

from common.params import MediumParams
from pilotwave.quantum.pilot import PilotWaveParams


@pytest.fixture(scope="session")
def medium() -> MediumParams:
    """The default silicone-oil bath (c = 11.95 mm/s, 25 Hz bounce)."""
    return MediumParams()


@pytest.fixture(scope="session")
def unit_medium() -> MediumParams:
    """c = ω₀ = h₀ = 1, so lengths are in units of c/ω₀."""
    return MediumParams(c=1.0, omega0=1.0, h0=1.0)


@pytest.fixture(scope="session")
def natural() -> PilotWaveParams:
    return PilotWaveParams.natural()


@pytest.fixture(scope="session")
def droplet_pilot(medium: MediumParams) -> PilotWaveParams:
    return PilotWaveParams.from_medium(medium, m0=1.0e-3)


@pytest.fixture
def isolated_env(monkeypatch: pytest.MonkeyPatch):
    """Strip DROPSIM_ overrides so config tests see only what they set."""
    for key in list(os.environ):
        if key.startswith("DROPSIM_"):
            monkeypatch.delenv(key)
    return monkeypatch

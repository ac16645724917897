# -*- coding: utf-8 -*-
from pathlib import Path

import pytest

from common.params import MediumParams
from harness.config import NumericsSection, OutputFormat
from harness.scenarios.base import RunContext


@pytest.fixture
def ctx(tmp_path: Path) -> RunContext:
    return RunContext(
        seed=0,
        workers=2,
        medium=MediumParams(),
        numerics=NumericsSection(),
        directory=tmp_path,
        fmt=OutputFormat.CSV,
        snapshot_cadence=0,
    )

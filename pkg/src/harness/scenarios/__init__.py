# -*- coding: utf-8 -*-
from common.errors import ConfigError

from .base import Scenario
from .pairs import OrbitingPair, PairAlignmentTorque
from .reflection import BoundaryReflection
from .rotating_bath import RotatingBathDemo
from .slits import DoubleSlit, SingleSlit
from .spin import SpinTables
from .tunnelling import TunnellingSweep
from .walker_speed import WalkerSpeedSweep

SCENARIOS: dict[str, type[Scenario]] = {
    cls.name: cls
    for cls in (
        WalkerSpeedSweep,
        BoundaryReflection,
        SingleSlit,
        DoubleSlit,
        TunnellingSweep,
        OrbitingPair,
        SpinTables,
        PairAlignmentTorque,
        RotatingBathDemo,
    )
}


def scenario_named(name: str) -> Scenario:
    try:
        return SCENARIOS[name]()
    except KeyError:
        raise ConfigError(f"unknown scenario {name!r}; choose one of {', '.join(sorted(SCENARIOS))}")

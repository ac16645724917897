# -*- coding: utf-8 -*-
"""
Counter-based random streams.

Every trajectory draws from its own Philox generator keyed by
(run seed, stream, trajectory index), so results do not depend on how work is
split across threads or in which order trajectories run.
"""
from enum import IntEnum

import numpy as np


class Stream(IntEnum):
    SLIT_STARTS = 1
    BOHM_STARTS = 2
    FRESH_SAMPLES = 3


def trajectory_rng(seed: int, stream: Stream, index: int) -> np.random.Generator:
    if seed < 0 or index < 0:
        raise ValueError(f"seed and index must be non-negative, got seed={seed}, index={index}")
    sequence = np.random.SeedSequence(seed, spawn_key=(int(stream), index))
    return np.random.Generator(np.random.Philox(sequence))


def uniform_draws(seed: int, stream: Stream, count: int, width: int) -> np.ndarray:
    """`count` rows of `width` uniforms on [0, 1), row i from trajectory i's generator."""
    out = np.empty((count, width))
    for i in range(count):
        out[i] = trajectory_rng(seed, stream, i).random(width)
    return out

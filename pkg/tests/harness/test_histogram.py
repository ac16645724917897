# -*- coding: utf-8 -*-
import math

import numpy as np
from hamcrest import assert_that, close_to, equal_to

from common.errors import DomainError
from harness.histogram import HISTOGRAM_COLUMNS, histogram, uniform_edges


def test_counts_and_out_of_range_values():
    values = [0.0, 0.5, 1.0, 1.5, 2.0, -1.0, math.nan, math.inf, -math.inf]
    hist = histogram(values, [0.0, 1.0, 2.0])
    assert_that(hist.counts.tolist(), equal_to([2, 2]))
    assert_that(hist.underflow, equal_to(2))
    # the last edge is exclusive; NaN and +inf land here too
    assert_that(hist.overflow, equal_to(3))
    assert_that(hist.total, equal_to(len(values)))
    assert_that(hist.centres.tolist(), equal_to([0.5, 1.5]))


def test_frame():
    frame = histogram([0.2, 0.3, 1.7], [0.0, 1.0, 2.0]).to_frame()
    assert_that(list(frame.columns), equal_to(HISTOGRAM_COLUMNS))
    assert_that(frame["count"].tolist(), equal_to([2, 1]))


def test_uniform_edges():
    edges = uniform_edges(0.0, 90.0, 5.0)
    assert_that(len(edges), equal_to(19))
    assert_that(float(edges[-1]), close_to(90.0, 1e-12))
    assert_that(float(np.diff(edges).min()), close_to(5.0, 1e-12))


def test_bad_edges():
    for edges in ([1.0], [0.0, 1.0, 1.0], [0.0, math.inf]):
        try:
            histogram([0.5], edges)
            assert False, "expected DomainError"
        except DomainError:
            pass
    try:
        uniform_edges(1.0, 0.0, 0.1)
        assert False, "expected DomainError"
    except DomainError:
        pass

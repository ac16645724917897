# -*- coding: utf-8 -*-
from dataclasses import dataclass

import numpy as np
import pandas as pd
from numpy.typing import ArrayLike, NDArray

from common.errors import DomainError

HISTOGRAM_COLUMNS = ["bin_lo", "bin_hi", "count"]


@dataclass
class Histogram:
    edges: NDArray[np.float64]
    counts: NDArray[np.int64]
    underflow: int
    overflow: int

    @property
    def centres(self) -> NDArray[np.float64]:
        return 0.5 * (self.edges[:-1] + self.edges[1:])

    @property
    def total(self) -> int:
        return int(self.counts.sum()) + self.underflow + self.overflow

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            {"bin_lo": self.edges[:-1], "bin_hi": self.edges[1:], "count": self.counts},
            columns=HISTOGRAM_COLUMNS,
        )


def uniform_edges(lower: float, upper: float, width: float) -> NDArray[np.float64]:
    if width <= 0 or upper <= lower:
        raise DomainError("need width > 0 and upper > lower")
    n = int(round((upper - lower) / width))
    return lower + width * np.arange(n + 1)


def histogram(values: ArrayLike, bin_edges: ArrayLike) -> Histogram:
    """
    Count values into half-open bins [eᵢ, eᵢ₊₁).

    Values below the first edge count as underflow; values at or above the
    last edge, and NaNs, count as overflow.

    Raises:
        DomainError: If fewer than two edges are given or they do not
            strictly increase.
    """
    edges = np.asarray(bin_edges, dtype=np.float64)
    if edges.ndim != 1 or len(edges) < 2:
        raise DomainError("a histogram needs at least two bin edges")
    if np.any(np.diff(edges) <= 0) or not np.all(np.isfinite(edges)):
        raise DomainError("bin edges must be finite and strictly increasing")

    v = np.asarray(values, dtype=np.float64).ravel()
    finite = np.isfinite(v) | np.isneginf(v)
    idx = np.searchsorted(edges, v[finite], side="right") - 1
    n_bins = len(edges) - 1
    underflow = int(np.sum(idx < 0))
    in_range = (idx >= 0) & (idx < n_bins)
    counts = np.bincount(idx[in_range], minlength=n_bins).astype(np.int64)
    overflow = int(np.sum(idx >= n_bins)) + int(np.sum(~finite))
    return Histogram(edges=edges, counts=counts, underflow=underflow, overflow=overflow)

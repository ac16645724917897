# -*- coding: utf-8 -*-
from typing import Optional, Sequence

import numpy as np
from numpy.typing import ArrayLike
from pydantic import BaseModel, ConfigDict, Field
from scipy.stats import linregress

from common.errors import DomainError, FitError


class FitResult(BaseModel):
    """
    Least-squares line y = slope·x + intercept.

    For `fit_exponential` the line is fitted to log y, so `slope` is the
    exponential rate and `intercept` the log of the prefactor.
    """

    model_config = ConfigDict(frozen=True)

    slope: float
    intercept: float
    r_squared: float = Field(ge=0.0, le=1.0)
    residual_rms: float = Field(ge=0.0)
    n_points: int = Field(ge=3)


def fit_line(xs: ArrayLike, ys: ArrayLike) -> FitResult:
    """
    Ordinary least squares of `ys` on `xs`.

    Raises:
        FitError: With fewer than 3 points or no spread in x.
        DomainError: If the inputs differ in length or hold non-finite values.
    """
    x = np.asarray(xs, dtype=np.float64)
    y = np.asarray(ys, dtype=np.float64)
    if x.shape != y.shape or x.ndim != 1:
        raise DomainError("fit needs two 1D sequences of equal length")
    if not (np.all(np.isfinite(x)) and np.all(np.isfinite(y))):
        raise DomainError("fit inputs must be finite")
    if len(x) < 3:
        raise FitError(f"a line fit needs at least 3 points, got {len(x)}")
    if np.ptp(x) == 0:
        raise FitError("all x values are equal; the slope is undefined")

    fit = linregress(x, y)
    residual = y - (fit.slope * x + fit.intercept)
    r_squared = 1.0 if np.ptp(y) == 0 else float(fit.rvalue) ** 2
    return FitResult(
        slope=float(fit.slope),
        intercept=float(fit.intercept),
        r_squared=min(1.0, max(0.0, r_squared)),
        residual_rms=float(np.sqrt(np.mean(residual**2))),
        n_points=len(x),
    )


def fit_exponential(xs: ArrayLike, ys: ArrayLike) -> FitResult:
    """Fit log y = slope·x + intercept; every y must be positive."""
    y = np.asarray(ys, dtype=np.float64)
    if np.any(~np.isfinite(y)) or np.any(y <= 0):
        raise DomainError("exponential fits need positive, finite y values")
    return fit_line(xs, np.log(y))


def first_local_minimum(counts: Sequence[float]) -> Optional[int]:
    """
    Index of the first interior bin lower than its left neighbour and not
    higher than its right one. Plateaus resolve to their first bin.
    """
    values = list(counts)
    for i in range(1, len(values) - 1):
        if values[i] < values[i - 1] and values[i] <= values[i + 1]:
            return i
    return None

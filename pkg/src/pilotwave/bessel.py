# -*- coding: utf-8 -*-
"""
Bessel functions of the first kind, Jₘ(x), for integer order.

Small arguments use the ascending power series; larger ones use Miller's
backward recurrence normalised with J₀ + 2ΣJ₂ₖ = 1. Both paths are
vectorised over numpy arrays.
"""
import math
from typing import overload

import numpy as np
from numpy.typing import ArrayLike, NDArray

from common.errors import DomainError

# Above this the series loses digits to cancellation (largest term ~ e^x).
SERIES_LIMIT = 8.0
_SERIES_TERMS = 48
_BIG = 1.0e250
_BIG_INV = 1.0e-250


@overload
def bessel_j(m: int, x: float) -> float: ...


@overload
def bessel_j(m: int, x: NDArray[np.float64]) -> NDArray[np.float64]: ...


def bessel_j(m: int, x: ArrayLike) -> float | NDArray[np.float64]:
    """
    Evaluate Jₘ(x) for an integer order m ≥ 0.

    Absolute error is below 1e-12 for |x| ≤ 50.

    Args:
        m (int): Non-negative order. Negative orders are handled by the caller
            via J₋ₘ = (−1)ᵐJₘ (see `bessel_j_signed`).
        x (ArrayLike): Argument(s); scalars return a float.

    Raises:
        DomainError: If m is negative or any x is not finite.
    """
    if m < 0:
        raise DomainError(f"bessel_j needs a non-negative order, got {m}")
    arr = np.asarray(x, dtype=np.float64)
    if not np.all(np.isfinite(arr)):
        raise DomainError("bessel_j needs finite arguments")

    ax = np.abs(arr)
    out = np.empty_like(ax)
    small = ax <= SERIES_LIMIT
    if np.any(small):
        out[small] = _series(m, ax[small])
    if not np.all(small):
        out[~small] = _miller(m, ax[~small])
    if m % 2 == 1:
        out = np.where(arr < 0, -out, out)

    if np.ndim(x) == 0:
        return float(out)
    return out


def bessel_j_signed(m: int, x: ArrayLike) -> float | NDArray[np.float64]:
    """Jₘ(x) for any integer order, using J₋ₘ = (−1)ᵐJₘ."""
    value = bessel_j(abs(m), x)
    if m < 0 and m % 2 != 0:
        return -value
    return value


def _series(m: int, x: NDArray[np.float64]) -> NDArray[np.float64]:
    half = x / 2.0
    term = np.power(half, m) / math.factorial(m)
    total = term.copy()
    minus_half_sq = -(half * half)
    for k in range(1, _SERIES_TERMS):
        term = term * minus_half_sq / (k * (k + m))
        total += term
    return total


def _miller(m: int, x: NDArray[np.float64]) -> NDArray[np.float64]:
    x_max = float(np.max(x))
    top = max(m, int(x_max))
    start = 2 * ((top + int(math.sqrt(160.0 * top)) + 10) // 2)

    two_over_x = 2.0 / x
    upper = np.zeros_like(x)  # J_{j}
    current = np.ones_like(x)  # J_{j-1} after each step
    result = np.zeros_like(x)
    norm = np.zeros_like(x)
    accumulate = False
    for j in range(start, 0, -1):
        lower = j * two_over_x * current - upper
        upper = current
        current = lower
        big = np.abs(current) > _BIG
        if np.any(big):
            scale = np.where(big, _BIG_INV, 1.0)
            current = current * scale
            upper = upper * scale
            result = result * scale
            norm = norm * scale
        if accumulate:
            norm = norm + current
        accumulate = not accumulate
        if j == m:
            result = upper.copy()

    norm = 2.0 * norm - current
    if m == 0:
        result = current
    return result / norm

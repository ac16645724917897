# -*- coding: utf-8 -*-
import math
from dataclasses import dataclass, field, replace
from enum import Enum
from pathlib import Path

import numpy as np
from numpy.typing import NDArray

from common.errors import DomainError


class Boundary(Enum):
    ABSORBING = "absorbing"
    REFLECTING = "reflecting"
    PERIODIC = "periodic"


@dataclass(frozen=True)
class ComplexField:
    """
    Complex lattice ψ_s in one or two dimensions.

    Axis 0 is x, axis 1 (if present) is y; `origin` is the coordinate of
    sample [0] (or [0, 0]). Steppers return new instances, samples are never
    mutated in place.
    """

    samples: NDArray[np.complex128]
    dx: float
    dt: float
    origin: tuple[float, ...] = field(default=(0.0,))
    boundary: Boundary = Boundary.REFLECTING
    t: float = 0.0

    def __post_init__(self):
        samples = np.asarray(self.samples, dtype=np.complex128)
        object.__setattr__(self, "samples", samples)
        if samples.ndim not in (1, 2):
            raise DomainError(f"fields are 1D or 2D, got {samples.ndim} dimensions")
        if min(samples.shape) < 3:
            raise DomainError("fields need at least 3 samples per axis")
        if not (self.dx > 0 and self.dt > 0):
            raise DomainError("dx and dt must be positive")
        if len(self.origin) != samples.ndim:
            raise DomainError(f"origin {self.origin} does not match a {samples.ndim}D field")

    @staticmethod
    def on_grid(
        samples: NDArray[np.complex128],
        lower: float | tuple[float, ...],
        dx: float,
        dt: float,
        boundary: Boundary = Boundary.REFLECTING,
        t: float = 0.0,
    ) -> "ComplexField":
        origin = (lower,) if isinstance(lower, (int, float)) else tuple(lower)
        return ComplexField(samples=samples, dx=dx, dt=dt, origin=origin, boundary=boundary, t=t)

    @property
    def ndim(self) -> int:
        return self.samples.ndim

    @property
    def cell(self) -> float:
        """Cell volume dxᵈ."""
        return self.dx**self.ndim

    def coords(self) -> tuple[NDArray[np.float64], ...]:
        """Coordinate arrays broadcastable against `samples` (ij indexing)."""
        axes = [o + self.dx * np.arange(n) for o, n in zip(self.origin, self.samples.shape)]
        if self.ndim == 1:
            return (axes[0],)
        return tuple(np.meshgrid(*axes, indexing="ij"))

    def axes(self) -> tuple[NDArray[np.float64], ...]:
        return tuple(o + self.dx * np.arange(n) for o, n in zip(self.origin, self.samples.shape))

    def density(self) -> NDArray[np.float64]:
        return np.abs(self.samples) ** 2

    def norm(self) -> float:
        """N = Σ|ψ_s|²dxᵈ."""
        return float(np.sum(self.density()) * self.cell)

    def normalized(self) -> "ComplexField":
        n = self.norm()
        if not math.isfinite(n) or n == 0:
            raise DomainError("cannot normalise a field with zero or non-finite norm")
        return self.with_samples(self.samples / math.sqrt(n))

    def with_samples(self, samples: NDArray[np.complex128], t: float | None = None) -> "ComplexField":
        return replace(self, samples=samples, t=self.t if t is None else t)


def write_snapshot(psi: ComplexField, path: Path | str) -> tuple[Path, Path]:
    """
    Write `<path>.bin` (row-major little-endian complex128) and `<path>.txt`.

    The header lists dims, dx, dt, t, origin and boundary as `key = value`.
    """
    base = Path(path)
    base.parent.mkdir(parents=True, exist_ok=True)
    data_path = base.with_name(base.name + ".bin")
    header_path = base.with_name(base.name + ".txt")
    np.ascontiguousarray(psi.samples, dtype="<c16").tofile(data_path)
    header = [
        f"dims = {' '.join(str(n) for n in psi.samples.shape)}",
        f"dx = {psi.dx!r}",
        f"dt = {psi.dt!r}",
        f"t = {psi.t!r}",
        f"origin = {' '.join(repr(float(o)) for o in psi.origin)}",
        f"boundary = {psi.boundary.value}",
    ]
    header_path.write_text("\n".join(header) + "\n", encoding="utf-8")
    return data_path, header_path


def read_snapshot(path: Path | str) -> ComplexField:
    base = Path(path)
    header: dict[str, str] = {}
    for line in base.with_name(base.name + ".txt").read_text(encoding="utf-8").splitlines():
        if "=" not in line:
            continue
        key, value = line.split("=", 1)
        header[key.strip()] = value.strip()
    dims = tuple(int(n) for n in header["dims"].split())
    samples = np.fromfile(base.with_name(base.name + ".bin"), dtype="<c16").reshape(dims)
    return ComplexField(
        samples=samples.astype(np.complex128),
        dx=float(header["dx"]),
        dt=float(header["dt"]),
        origin=tuple(float(o) for o in header["origin"].split()),
        boundary=Boundary(header["boundary"]),
        t=float(header["t"]),
    )

# -*- coding: utf-8 -*-
import math

from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator

from .errors import DomainError

STANDARD_GRAVITY = 9810.0  # mm/s²


class MediumParams(BaseModel):
    """
    Physical constants of the bath every wave-field formula consumes.

    Units are mm / s / g throughout. Defaults describe the silicone-oil bath
    of the walker experiments: 25 Hz bounce (50 Hz drive), c = 11.95 mm/s.

    Attributes:
        c (float): Surface-wave speed (mm/s).
        omega0 (float): Bounce angular frequency (rad/s).
        g (float): Gravitational acceleration (mm/s²).
        a_m (float): Peak forcing acceleration of the tray (mm/s²).
        rho0 (float): Fluid density (g/mm³).
        h0 (float): Standing-wave amplitude (mm).
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    c: float = Field(default=11.95, gt=0)
    omega0: float = Field(default=2 * math.pi * 25.0, gt=0)
    g: float = Field(default=STANDARD_GRAVITY, gt=0)
    a_m: float = Field(default=3.5 * STANDARD_GRAVITY, ge=0)
    rho0: float = Field(default=0.95e-3, gt=0)
    h0: float = Field(default=0.01, ge=0)

    @computed_field  # type: ignore[misc]
    @property
    def tau(self) -> float:
        """Bounce period (s)."""
        return 2 * math.pi / self.omega0

    @property
    def k_r(self) -> float:
        """Radial wavenumber of the bounce-frequency standing wave (1/mm)."""
        return self.omega0 / self.c

    @property
    def walking_regime(self) -> bool:
        return self.a_m > 3 * self.g

    def gamma(self, v: float) -> float:
        """Acoustic Lorentz factor for speed `v`; |v| ≥ c is a domain error."""
        beta_sq = (v / self.c) ** 2
        if not math.isfinite(beta_sq) or beta_sq >= 1.0:
            raise DomainError(f"speed {v} mm/s is not below the wave speed {self.c}")
        return 1.0 / math.sqrt(1.0 - beta_sq)


class BoostedFrame(BaseModel):
    """A frame moving at signed speed `v` along x, with its Lorentz factor."""

    model_config = ConfigDict(frozen=True)

    v: float
    gamma: float = Field(ge=1.0)

    @staticmethod
    def moving(v: float, params: MediumParams) -> "BoostedFrame":
        return BoostedFrame(v=v, gamma=params.gamma(v))

    @staticmethod
    def at_rest() -> "BoostedFrame":
        return BoostedFrame(v=0.0, gamma=1.0)

    @model_validator(mode="after")
    def _check_rest_frame(self) -> "BoostedFrame":
        if self.v == 0.0 and self.gamma != 1.0:
            raise ValueError("a frame at rest has gamma = 1")
        return self

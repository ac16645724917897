# -*- coding: utf-8 -*-
"""
Vertical bounce dynamics of a period-doubled walker.

The tray oscillates at twice the bounce frequency. A droplet leaves the
surface when the tray's downward acceleration reaches g, flies ballistically
and lands roughly one drive period later. The landing time T, counted from
the wave-phase origin, sets the walking speed through γ²(v²/c² + ½) ∝ T.
"""
import math

from loguru import logger
from pydantic import BaseModel, ConfigDict, Field, computed_field
from scipy.optimize import bisect

from common.errors import DomainError, RegimeError
from common.params import MediumParams

from .wavefield import Point

# Landing later than this fraction of τ stretches sin(ω₀T) ≈ ω₀T too far.
SMALL_ANGLE_LIMIT = 0.15
# a_m/g where the landing first slips past one drive period.
PERIOD_DOUBLING_ONSET = math.sqrt(1.0 + math.pi**2)
# Drive phase of that landing; T is measured from it.
WAVE_ORIGIN_PHASE = 2.0 * math.pi - math.atan(math.pi)
_SCAN_STEPS_PER_DRIVE_PERIOD = 2000


class DrivingConfig(BaseModel):
    """
    Tray forcing z = A cos(Ω_d t + phase0) with peak acceleration a_m = A·Ω_d².

    Attributes:
        a_m (float): Peak tray acceleration (mm/s²).
        drive_angular_frequency (float): Ω_d (rad/s); 2ω₀ for a period-doubled
            walker.
        phase0 (float): Drive phase at t = 0 (rad); 0 puts a tray top at t = 0.
    """

    model_config = ConfigDict(frozen=True)

    a_m: float = Field(ge=0)
    drive_angular_frequency: float = Field(gt=0)
    phase0: float = 0.0

    @computed_field  # type: ignore[misc]
    @property
    def drive_amplitude(self) -> float:
        """Tray displacement amplitude A (mm)."""
        return self.a_m / self.drive_angular_frequency**2

    @staticmethod
    def period_doubled(a_m: float, params: MediumParams, phase0: float = 0.0) -> "DrivingConfig":
        cfg = DrivingConfig(a_m=a_m, drive_angular_frequency=2 * params.omega0, phase0=phase0)
        ratio = a_m / params.g
        if not 0.0 <= ratio <= 5.0:
            logger.warning("Driving at {ratio:.2f}g is outside the usual 0-5g range", ratio=ratio)
        return cfg


class WalkerState(BaseModel):
    """
    Horizontal state of a walker at a bounce.

    Attributes:
        position (Point): Position (mm).
        velocity (Point): Horizontal velocity (mm/s).
        T (float): Landing time within the bounce period (s), lands at t = nτ + T.
        speed_cap (float): Free walking speed fixed by the driving (mm/s).
    """

    model_config = ConfigDict(frozen=True)

    position: Point = (0.0, 0.0)
    velocity: Point = (0.0, 0.0)
    T: float = Field(default=0.0, ge=0)
    speed_cap: float = Field(default=0.0, ge=0)

    @property
    def speed(self) -> float:
        return math.hypot(*self.velocity)

    def validate_against(self, params: MediumParams) -> "WalkerState":
        if self.T >= params.tau:
            raise DomainError(f"landing time {self.T} s is not within one bounce period")
        if self.speed >= params.c or self.speed_cap >= params.c:
            raise DomainError(f"walker speed must stay below c = {params.c} mm/s")
        return self


def parametric_gain_sign(a_m: float, g: float) -> float:
    """
    Net restoring term g − a_m/3 of the parametrically driven wave.

    Negative values mean the driving outweighs gravity and reverses it, so
    waves are reinforced at each bounce.
    """
    if a_m < 0 or g < 0:
        raise DomainError("a_m and g must be non-negative")
    return g - a_m / 3.0


def _flight(cfg: DrivingConfig, params: MediumParams) -> tuple[float, float]:
    """Takeoff drive phase and drive phase elapsed in flight, both in rad."""
    drive = cfg.drive_angular_frequency
    if abs(drive - 2 * params.omega0) > 1e-9 * drive:
        raise DomainError("only the period-doubled mode (drive at 2ω₀) is supported")
    ratio = cfg.a_m / params.g
    if ratio <= 1.0:
        raise RegimeError(f"a_m = {ratio:.3f}g never throws the droplet off the tray")

    takeoff = -math.acos(1.0 / ratio)
    cos0, sin0 = math.cos(takeoff), math.sin(takeoff)

    def gap(s: float) -> float:
        # ball − tray, in units of the drive amplitude, s = drive phase since takeoff
        return cos0 - s * sin0 - s * s / (2.0 * ratio) - math.cos(takeoff + s)

    # gap'' > 0 until the tray passes back through the takeoff acceleration
    s = 2.0 * abs(takeoff)
    step = 2 * math.pi / _SCAN_STEPS_PER_DRIVE_PERIOD
    s_limit = drive * 3 * params.tau
    previous = s
    while gap(s) > 0.0:
        previous = s
        s += step
        if s > s_limit:
            raise RegimeError(f"no landing within 3τ at a_m = {ratio:.3f}g")

    landing = bisect(gap, previous, s, xtol=1e-12 * drive, maxiter=200)
    if landing < 2 * math.pi:
        raise RegimeError(f"a_m = {ratio:.3f}g lands within one drive period (not period doubled)")
    if landing > 4 * math.pi:
        raise RegimeError(f"a_m = {ratio:.3f}g flies longer than one bounce period")
    return takeoff, landing


def landing_instant(cfg: DrivingConfig, params: MediumParams) -> float:
    """
    Clock time of landing (s) modulo τ, with t = 0 where the drive phase is phase0.

    Takeoff happens at drive phase −arccos(g/a_m), where the tray's downward
    acceleration first reaches g. The first downward crossing of the
    ballistic path z̈ = −g with the tray surface is bracketed on a fine scan
    and refined by bisection to 1e-12 s.

    Raises:
        DomainError: If the drive frequency is not 2ω₀.
        RegimeError: If the droplet never leaves the tray (a_m ≤ g), lands
            within one drive period (period-1 bouncing), lands after two drive
            periods, or does not land within 3τ.
    """
    takeoff, landing = _flight(cfg, params)
    t_land = (takeoff + landing - cfg.phase0) / cfg.drive_angular_frequency
    return t_land % params.tau


def landing_time(cfg: DrivingConfig, params: MediumParams) -> float:
    """
    Landing time T (s) in [0, τ), measured from the origin of the wave phase.

    The standing wave's cos(ω₀t) factor is phased so that T = 0 is the
    landing at the period-doubling onset a_m/g = √(1 + π²), the drive phase
    WAVE_ORIGIN_PHASE. Harder driving lands later, and T grows from zero
    across the walking range. The result does not depend on phase0.

    Raises:
        DomainError: If the drive frequency is not 2ω₀.
        RegimeError: As for `landing_instant`; in particular below the
            period-doubling onset, where the droplet lands within one drive
            period.
    """
    takeoff, landing = _flight(cfg, params)
    T = (takeoff + landing - WAVE_ORIGIN_PHASE) / cfg.drive_angular_frequency
    return T % params.tau


def velocity_law(v: float, params: MediumParams) -> float:
    """Left-hand side γ²(v²/c² + ½) of the walker speed law."""
    gamma = params.gamma(v)
    return gamma * gamma * ((v / params.c) ** 2 + 0.5)


def calibrate_kappa(T_ref: float, gamma_ref: float) -> float:
    """κ (1/s) such that a walker landing at T_ref moves with Lorentz factor gamma_ref."""
    if gamma_ref < 1.0:
        raise DomainError(f"gamma must be at least 1, got {gamma_ref}")
    if T_ref <= 0:
        raise DomainError(f"reference landing time must be positive, got {T_ref}")
    return (1.5 * gamma_ref * gamma_ref - 1.0) / T_ref


def walker_speed(T: float, kappa: float, params: MediumParams) -> float:
    """
    Walking speed v (mm/s) solving γ²(v²/c² + ½) = κT.

    With L = κT and γ² = 1/(1 − v²/c²) the solution is
    v²/c² = (L − ½)/(L + 1). Below L = ½ the droplet does not walk.
    """
    load = kappa * T
    if load <= 0.5:
        return 0.0
    beta_sq = (load - 0.5) / (load + 1.0)
    return params.c * math.sqrt(beta_sq)


def equilibrium_offset(
    T: float,
    v: float,
    params: MediumParams,
    small_angle: bool = True,
) -> float:
    """
    Offset Δx (mm) of the walker behind the centre of its wave pattern.

    Linearising the slope about the droplet, the slope vanishes where
    γ²(v²/c² + ½)Δx = vT. With `small_angle=False`, T is replaced by
    tan(ω₀T)/ω₀ (the linearised relation before the small-angle step).

    Raises:
        DomainError: If |v| ≥ c.
        RegimeError: If the wave surface is not convex at landing
            (cos(ω₀T) ≤ 0), so there is no stable offset.
    """
    gamma = params.gamma(v)
    if T > SMALL_ANGLE_LIMIT * params.tau:
        logger.warning(
            "Landing time {frac:.3f}τ exceeds the small-angle range (≤ {limit}τ)",
            frac=T / params.tau,
            limit=SMALL_ANGLE_LIMIT,
        )
    phase = params.omega0 * T
    if math.cos(phase) <= 0:
        raise RegimeError(f"no stable walker offset at landing phase {phase:.3f} rad")
    lever = T if small_angle else math.tan(phase) / params.omega0
    return v * lever / (gamma * gamma * ((v / params.c) ** 2 + 0.5))

# -*- coding: utf-8 -*-
"""
Error hierarchy shared by the numerics library and the CLI.

Each class carries the process exit code the CLI maps it to. Soft conditions
(approximations stretched past their comfortable range, over-barrier packets,
near-field samples) are logged as warnings instead of raised.
"""


class DropsimError(Exception):
    """Base class for all errors raised by dropsim."""

    exit_code: int = 1


class ConfigError(DropsimError):
    """Invalid configuration: unknown keys, bad values, unknown scenario."""

    exit_code = 2


class DomainError(DropsimError, ValueError):
    """An input lies outside the domain of the operation."""

    exit_code = 2


class SingularityError(DomainError):
    """Evaluation at the singular point of an inverse-power law."""


class RegimeError(DropsimError):
    """The requested physics lies outside the supported regime."""

    exit_code = 3


class NumericError(DropsimError):
    """A computation ran but its numbers cannot be trusted (exit code 4)."""

    exit_code = 4


class IntegrationError(NumericError):
    """Time stepping failed: stability bound, energy drift or wall contact."""


class FitError(NumericError):
    """A regression was degenerate."""


class NodeError(NumericError):
    """Guidance velocity requested at a node of the wave function."""

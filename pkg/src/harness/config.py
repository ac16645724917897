# -*- coding: utf-8 -*-
"""
Run configuration: TOML file, `DROPSIM_` environment overrides, CLI flags.

    [run]
    scenario = "single_slit"
    seed = 7

    [numerics]
    ensemble_size = 20000

    [scenario]
    wavelength = 7.3

Precedence (lowest first): model defaults, file, environment
(`DROPSIM_RUN__SEED=7`), command-line flags.
"""
from enum import Enum
from pathlib import Path
from typing import Any, Mapping, Optional

from dynaconf import Dynaconf
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from common.env import worker_limit
from common.errors import ConfigError
from common.params import MediumParams

ENVVAR_PREFIX = "DROPSIM"


class OutputFormat(Enum):
    CSV = "csv"
    JSON = "json"


class RunSection(BaseModel):
    model_config = ConfigDict(extra="forbid")

    scenario: Optional[str] = None
    seed: int = Field(default=0, ge=0)
    workers: int = Field(default_factory=worker_limit, ge=1)


class NumericsSection(BaseModel):
    """
    Grid and sampling overrides shared by several scenarios.

    Attributes:
        dx (Optional[float]): Grid spacing of field evolutions (tunnelling).
        dt (Optional[float]): Time step of field evolutions (tunnelling).
        extent (Optional[float]): Half-width of the evolution domain (tunnelling).
        ensemble_size (Optional[int]): Droplets per Monte Carlo run (slits).
        steps (Optional[int]): Integration steps per bounce (reflection).
    """

    model_config = ConfigDict(extra="forbid")

    dx: Optional[float] = Field(default=None, gt=0)
    dt: Optional[float] = Field(default=None, gt=0)
    extent: Optional[float] = Field(default=None, gt=0)
    ensemble_size: Optional[int] = Field(default=None, ge=1)
    steps: Optional[int] = Field(default=None, ge=1)


class OutputSection(BaseModel):
    model_config = ConfigDict(extra="forbid")

    directory: Path = Path("out")
    format: OutputFormat = OutputFormat.CSV
    # 0 disables field snapshots
    snapshot_cadence: int = Field(default=0, ge=0)


class ScenarioConfig(BaseModel):
    model_config = ConfigDict(extra="forbid")

    run: RunSection = Field(default_factory=RunSection)
    medium: MediumParams = Field(default_factory=MediumParams)
    numerics: NumericsSection = Field(default_factory=NumericsSection)
    output: OutputSection = Field(default_factory=OutputSection)
    # validated by the selected scenario's own parameter model
    scenario: dict[str, Any] = Field(default_factory=dict)


def load_config(
    path: Optional[Path | str] = None,
    scenario: Optional[str] = None,
    seed: Optional[int] = None,
    out: Optional[Path | str] = None,
    fmt: Optional[str] = None,
) -> ScenarioConfig:
    """
    Build a validated `ScenarioConfig`.

    Raises:
        ConfigError: If the file is missing, a key is unknown or a value is
            invalid.
    """
    files: list[str] = []
    if path is not None:
        if not Path(path).is_file():
            raise ConfigError(f"config file not found: {path}")
        files.append(str(path))

    settings = Dynaconf(
        settings_files=files,
        envvar_prefix=ENVVAR_PREFIX,
        environments=False,
        load_dotenv=False,
        merge_enabled=True,
    )
    raw = _lowercase_keys(settings.as_dict())

    run = dict(raw.get("run") or {})
    if scenario is not None:
        run["scenario"] = scenario
    if seed is not None:
        run["seed"] = seed
    raw["run"] = run
    if out is not None or fmt is not None:
        output = dict(raw.get("output") or {})
        if out is not None:
            output["directory"] = str(out)
        if fmt is not None:
            output["format"] = fmt
        raw["output"] = output

    try:
        return ScenarioConfig.model_validate(raw)
    except ValidationError as e:
        raise ConfigError(_describe(e)) from e


def _lowercase_keys(value: Any) -> Any:
    if isinstance(value, Mapping):
        return {str(k).lower(): _lowercase_keys(v) for k, v in value.items()}
    if isinstance(value, list):
        return [_lowercase_keys(v) for v in value]
    return value


def _describe(error: ValidationError) -> str:
    problems = []
    for item in error.errors():
        location = ".".join(str(part) for part in item["loc"])
        problems.append(f"{location}: {item['msg']}")
    return "invalid configuration: " + "; ".join(problems)

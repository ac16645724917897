# -*- coding: utf-8 -*-
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any, ClassVar, Optional

import pandas as pd
from pydantic import BaseModel, ConfigDict, ValidationError

from common.errors import ConfigError
from common.params import MediumParams

from ..config import NumericsSection, OutputFormat, ScenarioConfig


class ScenarioParams(BaseModel):
    """Base for per-scenario parameter tables; misspelled keys are errors."""

    model_config = ConfigDict(frozen=True, extra="forbid")


@dataclass(frozen=True)
class RunContext:
    """What a scenario may read besides its own parameters."""

    seed: int
    workers: int
    medium: MediumParams
    numerics: NumericsSection
    directory: Path
    fmt: OutputFormat
    snapshot_cadence: int

    @staticmethod
    def from_config(cfg: ScenarioConfig) -> "RunContext":
        return RunContext(
            seed=cfg.run.seed,
            workers=cfg.run.workers,
            medium=cfg.medium,
            numerics=cfg.numerics,
            directory=cfg.output.directory,
            fmt=cfg.output.format,
            snapshot_cadence=cfg.output.snapshot_cadence,
        )


class Scenario(ABC):
    """Contract for a named, reproducible experiment run by the harness."""

    name: ClassVar[str]
    Params: ClassVar[type[ScenarioParams]] = ScenarioParams

    class Kind(Enum):
        QUANTITATIVE = "quantitative"
        # plot-ready data only, no pass/fail metrics
        QUALITATIVE = "qualitative"

    @dataclass
    class Result:
        """
        Tables to write and the machine-readable summary of one run.

        `extra_files` lists files the scenario wrote itself (snapshots); they
        are digested into the manifest with the tables.
        """

        kind: "Scenario.Kind"
        tables: dict[str, pd.DataFrame]
        summary: dict[str, Any]
        detail: Optional[str] = None
        extra_files: list[Path] = field(default_factory=list)

        @staticmethod
        def ok(tables: dict[str, pd.DataFrame], summary: dict[str, Any]) -> "Scenario.Result":
            """
            Static factory method for a run whose summary carries metrics.

            Args:
                tables (dict[str, pd.DataFrame]): Output tables by file stem.
                summary (dict[str, Any]): Metrics, JSON-serialisable.
            """
            return Scenario.Result(kind=Scenario.Kind.QUANTITATIVE, tables=tables, summary=summary)

        @staticmethod
        def qualitative(
            tables: dict[str, pd.DataFrame],
            summary: dict[str, Any],
            detail: str,
        ) -> "Scenario.Result":
            """
            Static factory method for a demonstration run.

            Args:
                detail (str): What the data shows, for the summary.
            """
            return Scenario.Result(
                kind=Scenario.Kind.QUALITATIVE,
                tables=tables,
                summary=summary,
                detail=detail,
            )

    def parse(self, raw: dict[str, Any]) -> ScenarioParams:
        try:
            return self.Params.model_validate(raw)
        except ValidationError as e:
            problems = "; ".join(f"{'.'.join(str(p) for p in err['loc'])}: {err['msg']}" for err in e.errors())
            raise ConfigError(f"invalid parameters for scenario {self.name}: {problems}") from e

    @abstractmethod
    def run(self, ctx: RunContext, params: Any) -> "Scenario.Result":
        """Perform the experiment; must be deterministic for a given seed."""
        raise NotImplementedError()

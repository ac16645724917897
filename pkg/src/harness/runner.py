# -*- coding: utf-8 -*-
import time
from pathlib import Path

from loguru import logger

from common.errors import ConfigError

from .config import ScenarioConfig
from .emit import SUMMARY_NAME, Manifest, ManifestEntry, sha256_of, write_json, write_manifest, write_table
from .scenarios import scenario_named
from .scenarios.base import RunContext


def run_scenario(cfg: ScenarioConfig) -> Manifest:
    """
    Run the configured scenario and write its tables, summary and manifest.

    Outputs depend only on the configuration (seed included), never on the
    number of workers.

    Raises:
        ConfigError: If no scenario is selected or its parameters are invalid.
    """
    if cfg.run.scenario is None:
        raise ConfigError("no scenario selected (positional argument or [run] scenario)")
    scenario = scenario_named(cfg.run.scenario)
    params = scenario.parse(cfg.scenario)
    ctx = RunContext.from_config(cfg)
    directory = ctx.directory
    directory.mkdir(parents=True, exist_ok=True)

    logger.info("running {name} (seed {seed})", name=scenario.name, seed=ctx.seed)
    start = time.monotonic()
    result = scenario.run(ctx, params)
    logger.info("{name} finished in {secs:.2f}s", name=scenario.name, secs=time.monotonic() - start)

    written: list[Path] = [write_table(frame, directory / stem, ctx.fmt) for stem, frame in sorted(result.tables.items())]
    summary = dict(result.summary)
    summary["kind"] = result.kind.value
    if result.detail is not None:
        summary["detail"] = result.detail
    written.append(write_json(summary, directory / SUMMARY_NAME))
    written.extend(result.extra_files)

    manifest = Manifest(
        scenario=scenario.name,
        seed=ctx.seed,
        kind=result.kind.value,
        files=[ManifestEntry(path=_relative(p, directory), sha256=sha256_of(p)) for p in written],
        summary=summary,
    )
    write_manifest(manifest, directory)
    return manifest


def _relative(path: Path, directory: Path) -> str:
    try:
        return path.relative_to(directory).as_posix()
    except ValueError:
        return path.as_posix()

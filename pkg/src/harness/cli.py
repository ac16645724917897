# -*- coding: utf-8 -*-
import argparse
import sys
from typing import Optional, Sequence

from loguru import logger

from common.errors import DropsimError
from common.log import LOG_CONFIG

from .config import OutputFormat, load_config
from .emit import MANIFEST_NAME
from .runner import run_scenario
from .scenarios import SCENARIOS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dropsim",
        description="Run a bouncing-droplet pilot-wave scenario and write plot-ready data.",
    )
    parser.add_argument("scenario", nargs="?", choices=sorted(SCENARIOS), help="Scenario to run")
    parser.add_argument("--config", help="TOML configuration file")
    parser.add_argument("--out", help="Output directory (default: out)")
    parser.add_argument("--seed", type=int, help="Run seed for Monte Carlo scenarios")
    parser.add_argument(
        "--format",
        choices=[f.value for f in OutputFormat],
        help="Table format (default: csv)",
    )
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point of the `dropsim` command; returns the process exit code."""
    logger.configure(**LOG_CONFIG)
    args = build_parser().parse_args(argv)
    try:
        cfg = load_config(args.config, scenario=args.scenario, seed=args.seed, out=args.out, fmt=args.format)
        manifest = run_scenario(cfg)
    except DropsimError as e:
        logger.error("{kind}: {msg}", kind=type(e).__name__, msg=str(e))
        return e.exit_code
    print(cfg.output.directory / MANIFEST_NAME)
    logger.info("{n} files written for {name}", n=len(manifest.files), name=manifest.scenario)
    return 0


if __name__ == "__main__":
    sys.exit(main())

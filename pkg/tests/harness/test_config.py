# -*- coding: utf-8 -*-
from pathlib import Path

import pytest
from hamcrest import assert_that, close_to, equal_to, none

from common.errors import ConfigError
from harness.config import OutputFormat, load_config

EXAMPLE = """
[run]
scenario = "single_slit"
seed = 3

[medium]
c = 12.5

[numerics]
ensemble_size = 200

[output]
format = "json"

[scenario]
wavelength = 6.0
"""


@pytest.fixture
def config_file(tmp_path: Path) -> Path:
    path = tmp_path / "run.toml"
    path.write_text(EXAMPLE, encoding="utf-8")
    return path


def test_defaults(isolated_env: pytest.MonkeyPatch):
    cfg = load_config()
    assert_that(cfg.run.scenario, none())
    assert_that(cfg.run.seed, equal_to(0))
    assert_that(cfg.output.directory, equal_to(Path("out")))
    assert_that(cfg.output.format, equal_to(OutputFormat.CSV))
    assert_that(cfg.output.snapshot_cadence, equal_to(0))
    assert_that(cfg.medium.c, close_to(11.95, 1e-12))
    assert_that(cfg.scenario, equal_to({}))


def test_file_values(isolated_env: pytest.MonkeyPatch, config_file: Path):
    cfg = load_config(config_file)
    assert_that(cfg.run.scenario, equal_to("single_slit"))
    assert_that(cfg.run.seed, equal_to(3))
    assert_that(cfg.medium.c, close_to(12.5, 1e-12))
    assert_that(cfg.numerics.ensemble_size, equal_to(200))
    assert_that(cfg.output.format, equal_to(OutputFormat.JSON))
    assert_that(cfg.scenario, equal_to({"wavelength": 6.0}))


def test_environment_overrides_file(isolated_env: pytest.MonkeyPatch, config_file: Path):
    isolated_env.setenv("DROPSIM_RUN__SEED", "9")
    cfg = load_config(config_file)
    assert_that(cfg.run.seed, equal_to(9))
    assert_that(cfg.run.scenario, equal_to("single_slit"))


def test_flags_override_environment(isolated_env: pytest.MonkeyPatch, config_file: Path, tmp_path: Path):
    isolated_env.setenv("DROPSIM_RUN__SEED", "9")
    cfg = load_config(config_file, scenario="double_slit", seed=11, out=tmp_path / "runs", fmt="csv")
    assert_that(cfg.run.seed, equal_to(11))
    assert_that(cfg.run.scenario, equal_to("double_slit"))
    assert_that(cfg.output.directory, equal_to(tmp_path / "runs"))
    assert_that(cfg.output.format, equal_to(OutputFormat.CSV))


def test_unknown_key(isolated_env: pytest.MonkeyPatch, tmp_path: Path):
    path = tmp_path / "typo.toml"
    path.write_text("[run]\nsed = 4\n", encoding="utf-8")
    try:
        load_config(path)
        assert False, "expected ConfigError"
    except ConfigError:
        pass


def test_invalid_values(isolated_env: pytest.MonkeyPatch, tmp_path: Path):
    for text in ("[run]\nseed = -1\n", "[medium]\nc = -1.0\n"):
        path = tmp_path / "bad.toml"
        path.write_text(text, encoding="utf-8")
        try:
            load_config(path)
            assert False, f"expected ConfigError for {text!r}"
        except ConfigError:
            pass
    try:
        load_config(fmt="xml")
        assert False, "expected ConfigError"
    except ConfigError:
        pass


def test_missing_file(isolated_env: pytest.MonkeyPatch, tmp_path: Path):
    try:
        load_config(tmp_path / "absent.toml")
        assert False, "expected ConfigError"
    except ConfigError:
        pass

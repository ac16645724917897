# -*- coding: utf-8 -*-
"""Writers for scenario outputs and the run manifest."""
import hashlib
import json
from pathlib import Path
from typing import Any

import numpy as np
import pandas as pd
from pydantic import BaseModel, ConfigDict

from .config import OutputFormat

MANIFEST_NAME = "manifest.json"
SUMMARY_NAME = "summary.json"


class ManifestEntry(BaseModel):
    model_config = ConfigDict(frozen=True)

    path: str
    sha256: str


class Manifest(BaseModel):
    """Every file a run wrote, with digests, plus the scenario summary."""

    scenario: str
    seed: int
    kind: str
    files: list[ManifestEntry]
    summary: dict[str, Any]


def write_table(frame: pd.DataFrame, path: Path, fmt: OutputFormat) -> Path:
    """
    Write `frame` to `path` with the extension of `fmt`.

    CSV is comma separated with a header row, '.' decimals and LF line
    endings; JSON is a list of records.
    """
    path.parent.mkdir(parents=True, exist_ok=True)
    target = path.with_suffix("." + fmt.value)
    if fmt is OutputFormat.CSV:
        frame.to_csv(target, index=False, lineterminator="\n", float_format="%.12g")
    else:
        write_json(frame.to_dict(orient="records"), target)
    return target


def write_json(payload: Any, path: Path) -> Path:
    """UTF-8 JSON with sorted keys and a trailing newline."""
    path.parent.mkdir(parents=True, exist_ok=True)
    text = json.dumps(_plain(payload), sort_keys=True, indent=2, ensure_ascii=False)
    path.write_text(text + "\n", encoding="utf-8")
    return path


def sha256_of(path: Path) -> str:
    digest = hashlib.sha256()
    with path.open("rb") as f:
        for chunk in iter(lambda: f.read(1 << 16), b""):
            digest.update(chunk)
    return digest.hexdigest()


def write_manifest(manifest: Manifest, directory: Path) -> Path:
    return write_json(manifest.model_dump(mode="json"), directory / MANIFEST_NAME)


def _plain(value: Any) -> Any:
    """numpy scalars and arrays to built-in types."""
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, np.ndarray):
        return [_plain(v) for v in value.tolist()]
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, Path):
        return str(value)
    return value

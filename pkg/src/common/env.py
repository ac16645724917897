# -*- coding: utf-8 -*-
import os


def log_level() -> str:
    """Log level for the CLI, from `LOG_LEVEL` (default `INFO`)."""
    value = os.getenv("LOG_LEVEL", "INFO").strip().upper()
    if len(value) == 0:
        raise RuntimeError("Empty env var: LOG_LEVEL")
    return value


def worker_limit() -> int:
    """
    Upper bound on thread fan-out for sweeps, from `MAX_WORKERS`.

    Falls back to the CPU count. Never returns less than 1.
    """
    raw = os.getenv("MAX_WORKERS")
    if raw is None or len(raw.strip()) == 0:
        return max(1, os.cpu_count() or 1)
    try:
        return max(1, int(raw))
    except ValueError:
        raise RuntimeError(f"Invalid integer env var: MAX_WORKERS={raw}")

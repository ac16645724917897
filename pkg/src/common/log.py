# -*- coding: utf-8 -*-
import sys
import typing as t

from .env import log_level

LOG_CONFIG: dict[str, t.Any] = {
    "handlers": [
        {
            # stdout is left to the CLI for the manifest path
            "sink": sys.stderr,
            "colorize": False,
            "format": "{level} | {message}",
            "level": log_level(),
        },
    ],
}

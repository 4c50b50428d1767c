"""Constants and paths."""

from __future__ import annotations

from pathlib import Path

import platformdirs

# Directories
CONFIG_DIR = Path(platformdirs.user_config_dir("wallcross"))

# Config files
GLOBAL_CONFIG_PATH = CONFIG_DIR / "config.toml"
PROJECT_CONFIG_NAME = ".wallcross.toml"

# Environment overrides (CLI flags still win)
ORDER_ENV = "WALLCROSS_ORDER"
WORKERS_ENV = "WALLCROSS_WORKERS"

# Default truncation order is this factor times the genus
DEFAULT_ORDER_FACTOR = 10

# Variable universe of LaurentPoly, in canonical order
POLY_VARIABLES = ("x", "y", "t", "w")

# Output formats understood by every subcommand
OUTPUT_FORMATS = ("json", "csv", "text", "toon")

"""
Utility functions and classes.
"""

from .colors import Colors, ProgressIndicator
from .config_loader import (
    ConfigLoader,
    load_config,
    validate_config,
    prepare_config
)

__all__ = [
    "Colors",
    "ProgressIndicator",
    "ConfigLoader",
    "load_config",
    "validate_config",
    "prepare_config"
]

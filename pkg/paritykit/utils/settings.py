"""
ParityKit Settings
==================

Reads config.ini at the project root, then lets environment variables (and a
.env file, loaded by the utilities module) override individual values.

    [Bounds]       globe, oriental, cube  - largest n accepted by the family constructors
    [Enumeration]  max_cells              - cap on enumerated cell tables
    [Logging]      level
"""

import configparser
import logging
import os
from functools import lru_cache
from typing import Optional

from pydantic import BaseModel, Field, ValidationError

from paritykit.utils.paritykit_logging import ParityLogging
from paritykit.utils.utilities import env_setting

logger = ParityLogging("Settings")


class FamilyBounds(BaseModel):
    globe: int = Field(16, ge=0)
    oriental: int = Field(7, ge=0)
    cube: int = Field(6, ge=0)


class ParityKitSettings(BaseModel):
    bounds: FamilyBounds = FamilyBounds()
    max_cells: int = Field(10 ** 6, gt=0)
    log_level: str = "INFO"

    @property
    def numeric_log_level(self) -> int:
        return getattr(logging, self.log_level.upper(), logging.INFO)


def config_path() -> str:
    return os.path.abspath(os.path.join(os.path.dirname(__file__), '../../config.ini'))


def _read_ini(path: str) -> dict:
    config = configparser.ConfigParser()
    values = {}
    try:
        if not config.read(path):
            return values
    except configparser.Error as e:
        # A broken file falls back to defaults
        logger.warning(f"Failed to read configuration file {path}: {e}")
        return values

    if config.has_section('Bounds'):
        values['bounds'] = {key: config.get('Bounds', key) for key in ('globe', 'oriental', 'cube')
                            if config.has_option('Bounds', key)}
    if config.has_option('Enumeration', 'max_cells'):
        values['max_cells'] = config.get('Enumeration', 'max_cells')
    if config.has_option('Logging', 'level'):
        values['log_level'] = config.get('Logging', 'level')
    return values


@lru_cache(maxsize=None)
def _load(path: str, max_cells_override: Optional[str]) -> ParityKitSettings:
    values = _read_ini(path)
    if max_cells_override:
        values['max_cells'] = max_cells_override
    try:
        return ParityKitSettings.model_validate(values)
    except ValidationError as e:
        logger.warning(f"Invalid settings, using defaults: {e}")
        return ParityKitSettings()


def load_settings(path: str = None) -> ParityKitSettings:
    """Settings from config.ini with PARITYKIT_MAX_CELLS overriding the cell cap.

    The file is read once per path; the environment is consulted on every call.
    """
    return _load(path or config_path(), env_setting('PARITYKIT_MAX_CELLS'))


def reload_settings() -> None:
    """Forget cached file contents, e.g. after config.ini was edited."""
    _load.cache_clear()

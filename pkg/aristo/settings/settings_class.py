from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Optional, Dict, Any

import click

from aristo.settings import warnings
from aristo.settings.warnings import SettingsValidationError
from aristo.styling.shortcuts import e_error
from aristo.utils import load_module_from_path, get_current_directory, Module

__all__ = [
    'InvalidSettingsError',
    'Settings',
]


class InvalidSettingsError(Exception):
    """
    Error signifying that some validation did not pass during settings
    initialisation.
    """
    def __init__(self, message, errors):
        super().__init__(message)
        self.errors = errors


@warnings.register_warnings
@dataclass
class Settings:
    """
    The user's defaults, read from `.aristo/user_settings.py`. Every value can
    also be overridden from the command line.

    >>> settings = Settings.from_settings_module(None, None, None)
    >>> settings.k_max, settings.default_mode, settings.valuation_budget
    (2, 'corrected', 200000)
    """
    is_missing: bool
    settings_directory: Optional[Path]
    path: Optional[Path]
    module: Optional[Module]
    k_max: int = field(
        default=2,
        metadata={
            "module_attribute": "K_MAX",
            "warn": warnings.warn_negative_int,
        },
    )
    default_seed: int = field(
        default=0,
        metadata={
            "module_attribute": "DEFAULT_SEED",
            "warn": warnings.warn_not_int,
        },
    )
    default_mode: str = field(
        default="corrected",
        metadata={
            "module_attribute": "DEFAULT_MODE",
            "warn": warnings.error_on(warnings.warn_unknown_mode),
            "validate_on_load": True,
        },
    )
    valuation_budget: int = field(
        default=200000,
        metadata={
            "module_attribute": "VALUATION_BUDGET",
            "warn": warnings.warn_not_positive_int,
        },
    )
    countermodel_max_size: int = field(
        default=5,
        metadata={
            "module_attribute": "COUNTERMODEL_MAX_SIZE",
            "warn": warnings.warn_not_positive_int,
        },
    )
    line_sample_count: int = field(
        default=1000,
        metadata={
            "module_attribute": "LINE_SAMPLE_COUNT",
            "warn": warnings.warn_negative_int,
        },
    )
    progress_interval_seconds: float = field(
        default=5,
        metadata={
            "module_attribute": "PROGRESS_INTERVAL_SECONDS",
            "warn": warnings.warn_negative_number,
        },
    )
    _warnings: Dict[str, Any] = field(
        default_factory=warnings.get_warnings_for_new_instance)

    DEFAULT_SETTINGS_DIRECTORY = Path('.aristo')
    DEFAULT_PATH_NAME = 'user_settings.py'
    EXAMPLE_SETTINGS_DIRECTORY = \
        get_current_directory().joinpath('example_settings')

    @classmethod
    def from_default(cls):
        return cls.from_settings_directory(cls.DEFAULT_SETTINGS_DIRECTORY)

    @classmethod
    def from_settings_directory(cls, settings_directory):
        path = settings_directory.joinpath(cls.DEFAULT_PATH_NAME)
        if not path.exists():
            settings_module = None
        else:
            try:
                settings_module = load_module_from_path(path)
            except Exception as e:
                click.echo(
                    f"Could not load {e_error(str(path))} ({e}): using "
                    f"default settings", err=True)
                settings_module = None
        return cls.from_settings_module(
            settings_module, settings_directory=settings_directory, path=path)

    @classmethod
    def from_settings_module(cls, settings_module, settings_directory, path):
        return cls(
            is_missing=settings_module is None,
            settings_directory=settings_directory,
            path=path,
            module=settings_module,
            **{
                _field.name: getattr(
                    settings_module,
                    _field.metadata['module_attribute'],
                )
                for _field in fields(cls)
                if 'module_attribute' in _field.metadata
                and hasattr(
                    settings_module,
                    _field.metadata['module_attribute'],
                )
            },
        )

    def __post_init__(self):
        self.validate()

    def validate(self):
        validation_errors = self.get_validation_errors()
        if validation_errors:
            click.echo(
                f"Encountered {e_error('some errors')} while loading settings:"
                f"\n" + "\n".join(
                    f" * {error}"
                    for error in validation_errors
                ), err=True)
            raise InvalidSettingsError(
                "Settings were invalid", validation_errors)

    def get_validation_errors(self):
        validation_errors = []
        for _field in fields(self):
            if not _field.metadata.get('validate_on_load', False):
                continue
            try:
                getattr(self, _field.name)
            except SettingsValidationError as e:
                validation_errors.append(e)

        return validation_errors

    def __getattribute__(self, item):
        value = super().__getattribute__(item)
        _warnings = super().__getattribute__('_warnings')
        if item in _warnings:
            warn, module_attribute = _warnings.pop(item)
            value = warn(self, item, module_attribute, value)
            setattr(self, item, value)
        return value

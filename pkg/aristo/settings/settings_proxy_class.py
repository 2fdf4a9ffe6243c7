from contextlib import contextmanager
from dataclasses import dataclass
from typing import Iterator, Optional

from aristo.settings.settings_class import Settings


__all__ = ['UninitialisedSettingsError', 'SettingsProxy', 'settings_proxy']


class UninitialisedSettingsError(Exception):
    """
    The settings were accessed before `aristo` loaded them
    """

    DEFAULT_MESSAGE = "The settings have not been initialised yet"

    def __init__(self, message=DEFAULT_MESSAGE, *args):
        super().__init__(message, *args)


@dataclass
class SettingsProxy:
    """
    Holds the active settings: the user's, once a command starts, or the ones
    a test put in place

    >>> proxy = SettingsProxy()
    >>> proxy.has(), proxy(raise_if_missing=False)
    (False, None)
    >>> proxy()
    Traceback (most recent call last):
    ...
    aristo.settings.settings_proxy_class.UninitialisedSettingsError: ...
    >>> defaults = Settings.from_settings_module(None, None, None)
    >>> with proxy.using(defaults) as settings:
    ...     settings.countermodel_max_size, proxy.has()
    (5, True)
    >>> proxy.has()
    False
    """
    settings: Optional[Settings] = None

    def __call__(self, raise_if_missing: bool = True) -> Optional[Settings]:
        return self.get(raise_if_missing)

    def get(self, raise_if_missing: bool = True) -> Optional[Settings]:
        if raise_if_missing and self.settings is None:
            raise UninitialisedSettingsError()
        return self.settings

    def ensure_default(self) -> Settings:
        """Load the user's settings, unless some are already active"""
        if not self.has():
            self.set_default()
        return self.settings

    def set_default(self) -> Settings:
        return self.set(Settings.from_default())

    def set(self, new_settings: Optional[Settings]) -> Optional[Settings]:
        self.settings = new_settings
        return self.settings

    def has(self) -> bool:
        return self.settings is not None

    @contextmanager
    def using(self, new_settings: Optional[Settings]
              ) -> Iterator[Optional[Settings]]:
        """Make some settings active, and restore the previous ones after"""
        old_settings = self.settings
        self.set(new_settings)
        try:
            yield new_settings
        finally:
            self.set(old_settings)


settings_proxy = SettingsProxy()

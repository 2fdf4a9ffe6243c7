import io
import json
import sys
import tempfile
from contextlib import contextmanager
from pathlib import Path
from unittest.mock import patch

import click

from aristo.controller.controller import Controller
from aristo.report import OutputFormat
from aristo.settings import Settings, settings_proxy
from aristo.utils import get_current_directory

FIXTURES_DIRECTORY = get_current_directory().joinpath('fixtures')


def fixture_path(name: str) -> str:
    return str(FIXTURES_DIRECTORY.joinpath(name))


def load_fixture(name: str):
    return json.loads(Path(fixture_path(name)).read_text())


def make_default_settings() -> Settings:
    return Settings.from_settings_module(None, None, None)


def replacing_settings(new_settings):
    return settings_proxy.using(new_settings)


@contextmanager
def preparing_to_init_settings():
    with replacing_settings(None), \
         tempfile.TemporaryDirectory() as settings_directory, \
         patch.object(Settings, 'DEFAULT_SETTINGS_DIRECTORY',
                      Path(settings_directory)):
        yield settings_directory


@contextmanager
def amending_settings(**kwargs):
    settings_dict = {
        key: value
        for key, value in settings_proxy().__dict__.items()
        if key in kwargs
    }
    settings_proxy().__dict__.update(**kwargs)
    try:
        yield settings_proxy()
    finally:
        settings_proxy().__dict__.update(settings_dict)


@contextmanager
def capturing_stdout(color=True):
    original_stdout = sys.stdout
    captured = io.StringIO()
    sys.stdout = captured
    try:
        with click.Context(click.Command("dummy"), color=color):
            yield captured
    finally:
        sys.stdout = original_stdout


@contextmanager
def using_controller(json_output=False, seed=None, color=False):
    with replacing_settings(make_default_settings()), \
            capturing_stdout(color=color) as captured:
        controller = Controller(
            output_format=OutputFormat.from_flag(json_output), seed=seed)
        yield controller, captured


class DummyModule:
    def __init__(self, **kwargs):
        for key, value in kwargs.items():
            setattr(self, key, value)

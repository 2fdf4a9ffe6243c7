from dataclasses import fields, MISSING

import click

from aristo.axioms import AxiomMode
from aristo.styling.shortcuts import e_error, e_suggest, e_value


ALL_SETTINGS_WARNINGS = {}


def get_warnings_for_new_instance():
    return dict(ALL_SETTINGS_WARNINGS)


def register_warnings(settings_class):
    for _field in fields(settings_class):
        warn = _field.metadata.get('warn')
        if not warn:
            continue
        module_attribute = _field.metadata["module_attribute"]
        ALL_SETTINGS_WARNINGS[_field.name] = warn, module_attribute

    return settings_class


class SettingsValidationError(Exception):
    pass


def get_default(settings, name):
    _field, = (_field for _field in fields(settings) if _field.name == name)
    if _field.default is not MISSING:
        return _field.default
    return _field.default_factory()


def is_int(value):
    return isinstance(value, int) and not isinstance(value, bool)


def warn_not_int(settings, name, module_attribute, value):
    if is_int(value):
        return value
    return warn_and_use_default(settings, name, module_attribute, value)


def warn_not_positive_int(settings, name, module_attribute, value):
    if is_int(value) and value > 0:
        return value
    return warn_and_use_default(settings, name, module_attribute, value)


def warn_negative_int(settings, name, module_attribute, value):
    if is_int(value) and value >= 0:
        return value
    return warn_and_use_default(settings, name, module_attribute, value)


def warn_negative_number(settings, name, module_attribute, value):
    if isinstance(value, (int, float)) and not isinstance(value, bool) \
            and value >= 0:
        return value
    return warn_and_use_default(settings, name, module_attribute, value)


def warn_unknown_mode(settings, name, module_attribute, value):
    if isinstance(value, AxiomMode):
        return value.dashed
    try:
        return AxiomMode.parse(str(value)).dashed
    except ValueError:
        warn_attribute(settings, name, module_attribute, value)
        return None


def warn_and_use_default(settings, name, module_attribute, value):
    default = get_default(settings, name)
    warn_attribute(settings, name, module_attribute, value)
    click.echo(
        f"Using the default {e_value(str(default))} for "
        f"{e_error(module_attribute)} instead", err=True)
    return default


# noinspection PyUnusedLocal
def warn_attribute(settings, name, module_attribute, value):
    if settings.is_missing:
        click.echo(
            f"The value '{e_value(str(value))}' for "
            f"{e_error(module_attribute)} is invalid - use "
            f"{e_suggest('aristo init-settings')} to create your settings "
            f"file", err=True)
    else:
        click.echo(
            f"The value '{e_value(str(value))}' for "
            f"{e_error(module_attribute)} in "
            f"{e_value('user_settings.py')} is invalid", err=True)


def error_on(warn):
    def error_on_invalid_value(settings, name, module_attribute, value):
        final_value = warn(settings, name, module_attribute, value)
        if final_value is None:
            raise SettingsValidationError(
                f"Cannot proceed with an invalid {module_attribute} value")
        return final_value

    return error_on_invalid_value

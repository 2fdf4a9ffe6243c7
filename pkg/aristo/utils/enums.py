from enum import Enum


__all__ = ['StringEnum']


class StringEnum(Enum):
    """
    An enum class that auto-assigns values to be the snake case of the names,
    and can be looked up by either the value or its dashed variant, as typed on
    the command line

    >>> from enum import auto
    >>> class TestEnum(StringEnum):
    ...     Corrected = auto()
    ...     AsWritten = auto()
    ...     GlobalConnectivity = auto()
    >>> TestEnum.AsWritten.value
    'as_written'
    >>> TestEnum.GlobalConnectivity.value
    'global_connectivity'
    >>> TestEnum.parse('as-written')
    <TestEnum.AsWritten: 'as_written'>
    >>> TestEnum.AsWritten.dashed
    'as-written'
    >>> TestEnum.parse('sideways')
    Traceback (most recent call last):
    ...
    ValueError: 'sideways' is not one of: corrected, as-written, ...
    """
    # noinspection PyMethodParameters
    def _generate_next_value_(name, start, count, last_values):
        from aristo.utils import tokenize_camel_case
        return tokenize_camel_case(name, separator='_')

    @property
    def dashed(self) -> str:
        return self.value.replace('_', '-')

    @classmethod
    def parse(cls, text: str) -> 'StringEnum':
        value = text.strip().replace('-', '_')
        try:
            return cls(value)
        except ValueError:
            raise ValueError(
                f"'{text}' is not one of: "
                f"{', '.join(item.dashed for item in cls)}")

    @classmethod
    def dashed_choices(cls):
        return [item.dashed for item in cls]

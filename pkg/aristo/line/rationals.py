"""
Exact rationals and the two infinite endpoints, with their text forms.

Rationals are written as `"p/q"` or `"n"`, and never as floats.
"""
import re
from fractions import Fraction
from functools import total_ordering
from typing import Union

from aristo.errors import InputParseError

__all__ = [
    'Infinity', 'NEG_INF', 'POS_INF', 'Endpoint', 'parse_rational',
    'format_rational', 'parse_endpoint', 'format_endpoint', 'is_finite',
]


@total_ordering
class Infinity:
    """
    One of the two infinite endpoints; it compares correctly with rationals

    >>> NEG_INF < Fraction(-10 ** 9) < POS_INF
    True
    >>> sorted([POS_INF, Fraction(1), NEG_INF])
    [-inf, Fraction(1, 1), +inf]
    >>> Fraction(3) > NEG_INF, POS_INF == POS_INF
    (True, True)
    """
    __slots__ = ('sign',)

    def __init__(self, sign: int):
        self.sign = sign

    def __repr__(self) -> str:
        return '+inf' if self.sign > 0 else '-inf'

    def __eq__(self, other) -> bool:
        return isinstance(other, Infinity) and other.sign == self.sign

    def __hash__(self) -> int:
        return hash(('Infinity', self.sign))

    def __lt__(self, other) -> bool:
        if isinstance(other, Infinity):
            return self.sign < other.sign
        return self.sign < 0

    def __neg__(self) -> 'Infinity':
        return NEG_INF if self.sign > 0 else POS_INF


NEG_INF = Infinity(-1)
POS_INF = Infinity(1)

Endpoint = Union[Fraction, Infinity]

RE_RATIONAL = re.compile(r'^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$')


def parse_rational(text: Union[str, int, Fraction]) -> Fraction:
    """
    >>> parse_rational("1/2"), parse_rational("-3"), parse_rational(" 4 / 8 ")
    (Fraction(1, 2), Fraction(-3, 1), Fraction(1, 2))
    >>> parse_rational("0.5")
    Traceback (most recent call last):
    ...
    aristo.errors.InputParseError: ...
    >>> parse_rational("1/0")
    Traceback (most recent call last):
    ...
    aristo.errors.InputParseError: ...
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    match = RE_RATIONAL.match(str(text))
    if not match:
        raise InputParseError(
            f"Expected a rational like '3' or '-1/2', not '{text}'",
            position=str(text))
    numerator, denominator = match.groups()
    if denominator is not None and int(denominator) == 0:
        raise InputParseError(
            f"A rational can't have a zero denominator: '{text}'",
            position=str(text))
    return Fraction(int(numerator), int(denominator or 1))


def format_rational(value: Fraction) -> str:
    """
    >>> format_rational(Fraction(1, 2)), format_rational(Fraction(-4, 2))
    ('1/2', '-2')
    """
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_endpoint(text: Union[str, int, Fraction]) -> Endpoint:
    """
    >>> parse_endpoint("-inf"), parse_endpoint("+inf"), parse_endpoint("inf")
    (-inf, +inf, +inf)
    >>> parse_endpoint("2/3")
    Fraction(2, 3)
    """
    if isinstance(text, Infinity):
        return text
    if isinstance(text, str):
        stripped = text.strip().lower()
        if stripped in ('-inf', '-infinity'):
            return NEG_INF
        if stripped in ('+inf', 'inf', '+infinity', 'infinity'):
            return POS_INF
    return parse_rational(text)


def format_endpoint(value: Endpoint) -> str:
    if isinstance(value, Infinity):
        return repr(value)
    return format_rational(value)


def is_finite(value: Endpoint) -> bool:
    return not isinstance(value, Infinity)

"""
Polynomials in one variable with exact rational coefficients.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import zip_longest
from typing import Iterable, List, Tuple, Union

from aristo.errors import InputParseError
from aristo.line.rationals import parse_rational, format_rational

__all__ = ['Polynomial']

Coefficient = Union[Fraction, int, str]


@dataclass(frozen=True)
class Polynomial:
    """
    A polynomial by its constant-first coefficients, without trailing zeros

    >>> cubic = Polynomial.parse("0,-2,0,1")
    >>> cubic(2), cubic.derivative()(2)
    (Fraction(4, 1), Fraction(10, 1))
    >>> cubic.degree, Polynomial.zero().degree
    (3, -1)
    >>> str(cubic)
    'x^3 - 2x'
    """
    coefficients: Tuple[Fraction, ...]

    def __post_init__(self):
        coefficients = [
            parse_rational(coefficient)
            for coefficient in self.coefficients
        ]
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        object.__setattr__(self, 'coefficients', tuple(coefficients))

    @classmethod
    def from_coefficients(cls, coefficients: Iterable[Coefficient]
                          ) -> 'Polynomial':
        return cls(tuple(coefficients))

    @classmethod
    def parse(cls, text: str) -> 'Polynomial':
        """
        >>> Polynomial.parse("1/2, 0, 3").coefficients
        (Fraction(1, 2), Fraction(0, 1), Fraction(3, 1))
        >>> Polynomial.parse("")
        Polynomial(coefficients=())
        """
        text = text.strip()
        if not text:
            return cls.zero()
        return cls(tuple(
            parse_rational(part)
            for part in text.split(',')
        ))

    @classmethod
    def deserialise(cls, serialised) -> 'Polynomial':
        if isinstance(serialised, str):
            return cls.parse(serialised)
        if not isinstance(serialised, list):
            raise InputParseError(
                f"Expected a list of coefficients, not {serialised!r}")
        return cls(tuple(map(parse_rational, serialised)))

    def serialise(self) -> List[str]:
        return [format_rational(coefficient)
                for coefficient in self.coefficients]

    @classmethod
    def zero(cls) -> 'Polynomial':
        return cls(())

    @classmethod
    def constant(cls, value: Coefficient) -> 'Polynomial':
        return cls((value,))

    @classmethod
    def identity(cls) -> 'Polynomial':
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def coefficient(self, power: int) -> Fraction:
        if power < len(self.coefficients):
            return self.coefficients[power]
        return Fraction(0)

    def __call__(self, x: Coefficient) -> Fraction:
        x = parse_rational(x)
        result = Fraction(0)
        for coefficient in reversed(self.coefficients):
            result = result * x + coefficient
        return result

    def __add__(self, other: 'Polynomial') -> 'Polynomial':
        return Polynomial(tuple(
            first + second
            for first, second in zip_longest(
                self.coefficients, other.coefficients, fillvalue=0)
        ))

    def __neg__(self) -> 'Polynomial':
        return Polynomial(tuple(-value for value in self.coefficients))

    def __sub__(self, other: 'Polynomial') -> 'Polynomial':
        return self + (-other)

    def __mul__(self, other: 'Polynomial') -> 'Polynomial':
        """
        >>> (Polynomial.parse("1,1") * Polynomial.parse("-1,1")).serialise()
        ['-1', '0', '1']
        """
        if not self.coefficients or not other.coefficients:
            return Polynomial.zero()
        product = [Fraction(0)] * (len(self.coefficients)
                                   + len(other.coefficients) - 1)
        for index, first in enumerate(self.coefficients):
            for other_index, second in enumerate(other.coefficients):
                product[index + other_index] += first * second
        return Polynomial(tuple(product))

    def compose(self, inner: 'Polynomial') -> 'Polynomial':
        """
        `self(inner(x))`

        >>> square = Polynomial.parse("0,0,1")
        >>> square.compose(Polynomial.parse("1,1")).serialise()
        ['1', '2', '1']
        """
        result = Polynomial.zero()
        for coefficient in reversed(self.coefficients):
            result = result * inner + Polynomial.constant(coefficient)
        return result

    def derivative(self) -> 'Polynomial':
        return Polynomial(tuple(
            power * coefficient
            for power, coefficient in enumerate(self.coefficients)
        )[1:])

    def nth_derivative(self, order: int) -> 'Polynomial':
        result = self
        for _ in range(order):
            result = result.derivative()
        return result

    def __str__(self) -> str:
        """
        >>> str(Polynomial.parse("0,-1")), str(Polynomial.zero())
        ('-x', '0')
        >>> str(Polynomial.parse("1/2,0,-3"))
        '-3x^2 + 1/2'
        """
        terms = []
        for power in reversed(range(len(self.coefficients))):
            coefficient = self.coefficients[power]
            if coefficient == 0:
                continue
            magnitude = abs(coefficient)
            if power == 0:
                body = format_rational(magnitude)
            else:
                variable = 'x' if power == 1 else f'x^{power}'
                body = variable if magnitude == 1 else \
                    f"{format_rational(magnitude)}{variable}"
            sign = '-' if coefficient < 0 else '+'
            if not terms:
                terms.append(body if sign == '+' else f"-{body}")
            else:
                terms.append(f"{sign} {body}")
        if not terms:
            return '0'
        return ' '.join(terms)

"""
Truncated polynomial rings `Q[e]/(e^N)`: dual numbers for `N = 2`, and higher
jets above that.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple, Union

from aristo.errors import OrderMismatch, InvalidOrder, InputParseError
from aristo.line import parse_rational, format_rational

__all__ = ['TruncatedPoly', 'epsilon', 'constant', 'nilpotency_index']

Scalar = Union[Fraction, int, str]


@dataclass(frozen=True)
class TruncatedPoly:
    """
    `c0 + c1 e + ... + c(N-1) e^(N-1)`, where `e^N = 0`

    >>> a, b = TruncatedPoly.parse("1,2"), TruncatedPoly.parse("3,4")
    >>> str(a * b)
    '3 + 10ε'
    >>> str(epsilon(2) * epsilon(2)), str(epsilon(3) * epsilon(3))
    ('0', 'ε^2')
    >>> a + TruncatedPoly.parse("1,2,3")
    Traceback (most recent call last):
    ...
    aristo.errors.OrderMismatch: ...
    """
    order: int
    coefficients: Tuple[Fraction, ...]

    def __post_init__(self):
        if not isinstance(self.order, int) or self.order < 2:
            raise InvalidOrder(
                f"The truncation order must be at least 2, not {self.order}",
                witness=(self.order,))
        coefficients = tuple(map(parse_rational, self.coefficients))
        if len(coefficients) > self.order:
            raise InvalidOrder(
                f"Got {len(coefficients)} coefficients for order "
                f"{self.order}", witness=(self.order, len(coefficients)))
        coefficients += (Fraction(0),) * (self.order - len(coefficients))
        object.__setattr__(self, 'coefficients', coefficients)

    @classmethod
    def parse(cls, text: str, order: Optional[int] = None
              ) -> 'TruncatedPoly':
        """
        >>> TruncatedPoly.parse("3,5").coefficients
        (Fraction(3, 1), Fraction(5, 1))
        >>> TruncatedPoly.parse("1/2", order=3).coefficients
        (Fraction(1, 2), Fraction(0, 1), Fraction(0, 1))
        """
        parts = [part for part in text.split(',') if part.strip()]
        if not parts:
            raise InputParseError(
                f"Expected coefficients like '3,5', not '{text}'",
                position=text)
        if order is None:
            order = max(2, len(parts))
        return cls(order, tuple(map(parse_rational, parts)))

    @classmethod
    def truncating(cls, order: int, coefficients) -> 'TruncatedPoly':
        return cls(order, tuple(coefficients)[:order])

    def serialise(self) -> dict:
        return {
            'order': self.order,
            'coefficients': list(map(format_rational, self.coefficients)),
        }

    def __str__(self) -> str:
        terms = []
        for power, coefficient in enumerate(self.coefficients):
            if coefficient == 0:
                continue
            if power == 0:
                term = format_rational(coefficient)
            else:
                variable = 'ε' if power == 1 else f'ε^{power}'
                if coefficient == 1:
                    term = variable
                elif coefficient == -1:
                    term = f"-{variable}"
                else:
                    term = f"{format_rational(coefficient)}{variable}"
            terms.append(term)
        if not terms:
            return '0'
        return ' + '.join(terms).replace('+ -', '- ')

    def _coerce(self, other) -> 'TruncatedPoly':
        if isinstance(other, TruncatedPoly):
            if other.order != self.order:
                raise OrderMismatch(
                    f"Can't combine orders {self.order} and {other.order}",
                    witness=(self.order, other.order))
            return other
        return constant(other, self.order)

    def __add__(self, other) -> 'TruncatedPoly':
        other = self._coerce(other)
        return TruncatedPoly(self.order, tuple(
            first + second
            for first, second in zip(self.coefficients, other.coefficients)
        ))

    __radd__ = __add__

    def __neg__(self) -> 'TruncatedPoly':
        return TruncatedPoly(self.order, tuple(
            -coefficient for coefficient in self.coefficients))

    def __sub__(self, other) -> 'TruncatedPoly':
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> 'TruncatedPoly':
        return self._coerce(other) - self

    def __mul__(self, other) -> 'TruncatedPoly':
        other = self._coerce(other)
        product = [Fraction(0)] * self.order
        for power, first in enumerate(self.coefficients):
            if first == 0:
                continue
            for other_power, second in enumerate(
                    other.coefficients[:self.order - power]):
                product[power + other_power] += first * second
        return TruncatedPoly(self.order, tuple(product))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> 'TruncatedPoly':
        """
        >>> str(epsilon(4) ** 3), str(epsilon(4) ** 4), str(epsilon(4) ** 0)
        ('ε^3', '0', '1')
        """
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(
                f"Only non-negative integer powers exist, not {exponent}")
        result = constant(1, self.order)
        for _ in range(exponent):
            result = result * self
        return result

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    @property
    def standard_part(self) -> Fraction:
        return self.coefficients[0]


def epsilon(order: int = 2) -> TruncatedPoly:
    return TruncatedPoly(order, (0, 1))


def constant(value: Scalar, order: int = 2) -> TruncatedPoly:
    return TruncatedPoly(order, (parse_rational(value),))


def nilpotency_index(value: TruncatedPoly) -> Optional[int]:
    """
    The smallest `k` with `value^k = 0`, if there is one

    >>> nilpotency_index(epsilon(5)), nilpotency_index(epsilon(5) ** 2)
    (5, 3)
    >>> nilpotency_index(constant(2, 3)) is None
    True
    """
    if value.standard_part != 0:
        return None
    power = value
    index = 1
    while not power.is_zero():
        power = power * value
        index += 1
    return index

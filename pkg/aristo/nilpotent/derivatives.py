"""
Derivatives by evaluating polynomials at `x + e`, and the Leibniz rule as a
computation with `dy dz = 0`.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import List

from aristo.errors import OrderMismatch, InvalidOrder
from aristo.line import Polynomial, parse_rational, format_rational
from aristo.nilpotent.truncated_poly import TruncatedPoly, constant, epsilon

__all__ = [
    'evaluate_polynomial', 'lift_and_eval', 'derivative',
    'higher_derivatives', 'LeibnizTrace', 'leibniz_check',
]


def evaluate_polynomial(f: Polynomial, value: TruncatedPoly) -> TruncatedPoly:
    result = constant(0, value.order)
    for coefficient in reversed(f.coefficients):
        result = result * value + coefficient
    return result


def lift_and_eval(f: Polynomial, x, order: int = 2) -> TruncatedPoly:
    """
    `f(x + e)`, where the coefficient of `e^k` is the `k`-th derivative over
    `k!`

    >>> str(lift_and_eval(Polynomial.parse("0,-2,0,1"), 2))
    '4 + 10ε'
    >>> str(lift_and_eval(Polynomial.parse("7"), "1/2", order=3))
    '7'
    """
    return evaluate_polynomial(
        f, constant(parse_rational(x), order) + epsilon(order))


def derivative(f: Polynomial, x) -> Fraction:
    """
    >>> derivative(Polynomial.parse("0,-2,0,1"), 2)
    Fraction(10, 1)
    >>> derivative(Polynomial.parse("0,0,0,0,0,1"), 1)
    Fraction(5, 1)
    """
    return lift_and_eval(f, x, 2).coefficients[1]


def higher_derivatives(f: Polynomial, x, order: int) -> List[Fraction]:
    """
    The value and the derivatives below `order`

    >>> list(map(str, higher_derivatives(Polynomial.parse("0,0,0,1"), 1, 5)))
    ['1', '3', '6', '6', '0']
    """
    lifted = lift_and_eval(f, x, order)
    return [
        factorial(power) * coefficient
        for power, coefficient in enumerate(lifted.coefficients)
    ]


@dataclass(frozen=True)
class LeibnizTrace:
    """
    The expansion of `(y + dy)(z + dz) - yz`, showing the discarded `dy dz`
    """
    y: TruncatedPoly
    z: TruncatedPoly
    product: TruncatedPoly
    difference: TruncatedPoly
    middle: Fraction
    discarded: Fraction
    holds: bool

    def serialise(self) -> dict:
        return {
            'y': self.y.serialise(),
            'z': self.z.serialise(),
            'product': self.product.serialise(),
            'difference': self.difference.serialise(),
            'middle': format_rational(self.middle),
            'discarded': format_rational(self.discarded),
            'holds': self.holds,
        }

    def lines(self) -> List[str]:
        y0, y1 = self.y.coefficients
        z0, z1 = self.z.coefficients
        return [
            f"(y + dy)(z + dz) = ({self.y})({self.z})",
            f"  = {format_rational(y0 * z0)} "
            f"+ ({format_rational(y0)}·{format_rational(z1)} "
            f"+ {format_rational(z0)}·{format_rational(y1)})ε "
            f"+ {format_rational(self.discarded)}ε^2",
            f"  ε^2 = 0 discards dy dz = {format_rational(self.discarded)}ε^2",
            f"d(yz) = {self.difference}",
        ]


def leibniz_check(y: TruncatedPoly, z: TruncatedPoly) -> LeibnizTrace:
    """
    >>> trace = leibniz_check(
    ...     TruncatedPoly.parse("3,5"), TruncatedPoly.parse("2,7"))
    >>> trace.holds, str(trace.difference), trace.discarded
    (True, '31ε', Fraction(35, 1))
    >>> leibniz_check(epsilon(), epsilon()).difference.is_zero()
    True
    """
    if y.order != z.order:
        raise OrderMismatch(
            f"Can't combine orders {y.order} and {z.order}",
            witness=(y.order, z.order))
    if y.order != 2:
        raise InvalidOrder(
            f"The Leibniz rule is checked on dual numbers, of order 2, not "
            f"{y.order}", witness=(y.order,))
    y0, y1 = y.coefficients
    z0, z1 = z.coefficients
    product = y * z
    difference = product - y0 * z0
    middle = y0 * z1 + z0 * y1
    return LeibnizTrace(
        y=y, z=z, product=product, difference=difference, middle=middle,
        discarded=y1 * z1,
        holds=difference == TruncatedPoly(2, (0, middle)),
    )

"""
Piecewise-polynomial functions on the line, their germs, strata and
intermediate values.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

from aristo.errors import (
    MalformedPiecewiseFn, NotPiecewiseLinear, NotContinuousOnInterval,
    TargetOutOfRange, InputParseError,
)
from aristo.line.open_region import OpenRegion
from aristo.line.polynomial import Polynomial
from aristo.line.rationals import (
    NEG_INF, POS_INF, Endpoint, parse_rational, format_rational,
)

__all__ = [
    'PiecewiseFn', 'Germ', 'Stratum', 'germ_at', 'catastrophe_set',
    'smoothness_at', 'strata', 'ivt_witness', 'image_of_interval',
    'absolute_value', 'heaviside',
]

Rational = Union[Fraction, int, str]


@dataclass(frozen=True)
class Germ:
    at: Fraction
    left_poly: Polynomial
    point_value: Fraction
    right_poly: Polynomial

    def serialise(self):
        return {
            'at': format_rational(self.at),
            'left': self.left_poly.serialise(),
            'value': format_rational(self.point_value),
            'right': self.right_poly.serialise(),
        }

    def __str__(self) -> str:
        return (
            f"({self.left_poly}, {format_rational(self.point_value)}, "
            f"{self.right_poly})"
        )


@dataclass(frozen=True)
class PiecewiseFn:
    """
    A function that is a polynomial between consecutive breakpoints, and
    takes an assigned value at each breakpoint

    >>> f = absolute_value()
    >>> f(-3), f(0), f("1/2")
    (Fraction(3, 1), Fraction(0, 1), Fraction(1, 2))
    >>> PiecewiseFn.build(["0"], [[1]], {"0": 0})
    Traceback (most recent call last):
    ...
    aristo.errors.MalformedPiecewiseFn: ...
    """
    breakpoints: Tuple[Fraction, ...]
    pieces: Tuple[Polynomial, ...]
    values: Tuple[Fraction, ...]

    @classmethod
    def build(cls, breakpoints, pieces, values) -> 'PiecewiseFn':
        """
        Validate and normalise; `values` maps breakpoints to values, or lists
        them in breakpoint order
        """
        breakpoints = tuple(map(parse_rational, breakpoints))
        if any(
            first >= second
            for first, second in zip(breakpoints, breakpoints[1:])
        ):
            raise MalformedPiecewiseFn(
                "Breakpoints must be strictly increasing",
                witness=tuple(map(format_rational, breakpoints)))
        pieces = tuple(
            piece if isinstance(piece, Polynomial)
            else Polynomial.deserialise(piece)
            for piece in pieces
        )
        if len(pieces) != len(breakpoints) + 1:
            raise MalformedPiecewiseFn(
                f"Expected {len(breakpoints) + 1} pieces for "
                f"{len(breakpoints)} breakpoints, but got {len(pieces)}",
                witness=(len(breakpoints), len(pieces)))
        if isinstance(values, dict):
            by_point: Dict[Fraction, Fraction] = {
                parse_rational(point): parse_rational(value)
                for point, value in values.items()
            }
            unknown = set(by_point) - set(breakpoints)
            if unknown:
                raise MalformedPiecewiseFn(
                    f"Values given at non-breakpoints: "
                    f"{', '.join(map(format_rational, sorted(unknown)))}",
                    witness=tuple(map(format_rational, sorted(unknown))))
            missing = [
                point for point in breakpoints if point not in by_point]
            if missing:
                raise MalformedPiecewiseFn(
                    f"Missing values at breakpoints: "
                    f"{', '.join(map(format_rational, missing))}",
                    witness=tuple(map(format_rational, missing)))
            values = tuple(by_point[point] for point in breakpoints)
        else:
            values = tuple(map(parse_rational, values))
            if len(values) != len(breakpoints):
                raise MalformedPiecewiseFn(
                    f"Expected {len(breakpoints)} breakpoint values, but got "
                    f"{len(values)}",
                    witness=(len(breakpoints), len(values)))
        return cls(breakpoints, pieces, values)

    @classmethod
    def polynomial(cls, piece: Polynomial) -> 'PiecewiseFn':
        return cls((), (piece,), ())

    @classmethod
    def deserialise(cls, serialised) -> 'PiecewiseFn':
        if not isinstance(serialised, dict) \
                or not {'breakpoints', 'pieces'} <= set(serialised):
            raise InputParseError(
                "A piecewise function needs 'breakpoints' and 'pieces'")
        return cls.build(
            serialised['breakpoints'], serialised['pieces'],
            serialised.get('values', {}))

    def serialise(self):
        return {
            'breakpoints': list(map(format_rational, self.breakpoints)),
            'pieces': [piece.serialise() for piece in self.pieces],
            'values': {
                format_rational(point): format_rational(value)
                for point, value in zip(self.breakpoints, self.values)
            },
        }

    def breakpoint_index(self, x: Fraction) -> Optional[int]:
        try:
            return self.breakpoints.index(x)
        except ValueError:
            return None

    def piece_index_at(self, x: Fraction) -> int:
        """The index of the piece in effect just right of `x`"""
        return sum(1 for point in self.breakpoints if point <= x)

    def piece_at(self, x: Fraction) -> Polynomial:
        return self.pieces[self.piece_index_at(x)]

    def __call__(self, x: Rational) -> Fraction:
        x = parse_rational(x)
        index = self.breakpoint_index(x)
        if index is not None:
            return self.values[index]
        return self.piece_at(x)(x)

    def piece_bounds(self, index: int) -> Tuple[Endpoint, Endpoint]:
        bounds = (NEG_INF,) + self.breakpoints + (POS_INF,)
        return bounds[index], bounds[index + 1]

    def is_piecewise_linear(self) -> bool:
        return all(piece.degree <= 1 for piece in self.pieces)

    def add_breakpoint(self, x: Rational) -> 'PiecewiseFn':
        """
        Refine with a spurious breakpoint, that doesn't change the function

        >>> f = absolute_value().add_breakpoint(2)
        >>> f.breakpoints, f(2), f(3)
        ((Fraction(0, 1), Fraction(2, 1)), Fraction(2, 1), Fraction(3, 1))
        """
        x = parse_rational(x)
        if self.breakpoint_index(x) is not None:
            return self
        index = self.piece_index_at(x)
        piece = self.pieces[index]
        return PiecewiseFn(
            self.breakpoints[:index] + (x,) + self.breakpoints[index:],
            self.pieces[:index] + (piece, piece) + self.pieces[index + 1:],
            self.values[:index] + (piece(x),) + self.values[index:],
        )


def absolute_value() -> PiecewiseFn:
    return PiecewiseFn.build(["0"], [["0", "-1"], ["0", "1"]], {"0": "0"})


def heaviside() -> PiecewiseFn:
    return PiecewiseFn.build(["0"], [[], ["1"]], {"0": "1"})


def germ_at(f: PiecewiseFn, x: Rational) -> Germ:
    """
    >>> str(germ_at(absolute_value(), 0))
    '(-x, 0, x)'
    >>> str(germ_at(heaviside(), 0))
    '(0, 1, 1)'
    >>> str(germ_at(absolute_value(), 5))
    '(x, 5, x)'
    """
    x = parse_rational(x)
    index = f.breakpoint_index(x)
    if index is None:
        piece = f.piece_at(x)
        return Germ(x, piece, piece(x), piece)
    return Germ(x, f.pieces[index], f.values[index], f.pieces[index + 1])


def smoothness_at(f: PiecewiseFn, index: int) -> Optional[int]:
    """
    The largest `k` with `f` being `C^k` at the breakpoint, `-1` for a
    discontinuity, or `None` if `f` is smooth there

    >>> smoothness_at(absolute_value(), 0), smoothness_at(heaviside(), 0)
    (0, -1)
    >>> smoothness_at(absolute_value().add_breakpoint(1), 1) is None
    True
    """
    point = f.breakpoints[index]
    left, right = f.pieces[index], f.pieces[index + 1]
    value = f.values[index]
    if not (left(point) == value == right(point)):
        return -1
    if left == right:
        return None
    order = 0
    while True:
        left, right = left.derivative(), right.derivative()
        if left(point) != right(point):
            return order
        order += 1


def catastrophe_set(f: PiecewiseFn) -> List[Fraction]:
    """
    >>> catastrophe_set(absolute_value()), catastrophe_set(heaviside())
    ([], [Fraction(0, 1)])
    """
    return [
        point
        for index, point in enumerate(f.breakpoints)
        if smoothness_at(f, index) == -1
    ]


@dataclass(frozen=True)
class Stratum:
    """
    An open interval or a single point, with the smoothness class of the
    function there

    An interval stratum lists the point strata on its frontier. `smoothness`
    is `None` for smooth, `-1` for a discontinuity, and otherwise the
    largest `k` with the function `C^k` there, at most `k_max`. `capped` is
    set when the function is smoother than `k_max`, and labelled `C^k+`.
    """
    region: OpenRegion
    point: Optional[Fraction]
    smoothness: Optional[int]
    capped: bool = False
    frontier: Tuple[Fraction, ...] = field(default=())

    @property
    def is_point(self) -> bool:
        return self.point is not None

    @property
    def label(self) -> str:
        if self.smoothness is None:
            return 'C^inf'
        if self.smoothness < 0:
            return 'discontinuous'
        suffix = '+' if self.capped else ''
        return f'C^{self.smoothness}{suffix}'

    def serialise(self):
        serialised = {
            'kind': 'point' if self.is_point else 'interval',
            'smoothness': self.label,
        }
        if self.is_point:
            serialised['at'] = format_rational(self.point)
        else:
            serialised['region'] = self.region.serialise()
            serialised['frontier'] = list(map(format_rational, self.frontier))
        return serialised

    def __str__(self) -> str:
        if self.is_point:
            return f"{{{format_rational(self.point)}}} {self.label}"
        return f"{self.region} {self.label}"


def strata(f: PiecewiseFn, k_max: int = 2) -> List[Stratum]:
    """
    Split the line at every breakpoint where the function is not smooth:
    each such breakpoint is a point stratum, and the maximal open intervals
    between them, where the function is a single polynomial, are smooth

    >>> list(map(str, strata(absolute_value())))
    ['(-inf, 0) C^inf', '{0} C^0', '(0, +inf) C^inf']
    >>> list(map(str, strata(heaviside())))
    ['(-inf, 0) C^inf', '{0} discontinuous', '(0, +inf) C^inf']
    >>> list(map(str, strata(PiecewiseFn.polynomial(Polynomial.parse("1,2")))))
    ['(-inf, +inf) C^inf']
    >>> cubic = PiecewiseFn.build([0], [[], [0, 0, 0, 1]], [0])
    >>> str(strata(cubic, k_max=1)[1]), str(strata(cubic)[1])
    ('{0} C^1+', '{0} C^2')
    >>> str(strata(absolute_value(), k_max=0)[1])
    '{0} C^0'
    """
    if k_max < 0:
        raise ValueError(f"k_max must not be negative, not {k_max}")
    singular: List[Tuple[Fraction, int]] = [
        (point, smoothness)
        for index, point in enumerate(f.breakpoints)
        for smoothness in [smoothness_at(f, index)]
        if smoothness is not None
    ]
    bounds: List[Endpoint] = \
        [NEG_INF] + [point for point, _ in singular] + [POS_INF]
    result = []
    for index, (low, high) in enumerate(zip(bounds, bounds[1:])):
        frontier = tuple(
            point
            for point in (low, high)
            if isinstance(point, Fraction)
        )
        result.append(Stratum(
            region=OpenRegion(((low, high),)), point=None, smoothness=None,
            frontier=frontier))
        if index < len(singular):
            point, smoothness = singular[index]
            result.append(Stratum(
                region=OpenRegion.empty(), point=point,
                smoothness=min(smoothness, k_max),
                capped=smoothness > k_max))
    return result


def _continuous_within(germ: Germ, low: Fraction, high: Fraction) -> bool:
    """Continuity at a breakpoint, only from the sides inside `[low, high]`"""
    from_left = germ.at == low or germ.left_poly(germ.at) == germ.point_value
    from_right = \
        germ.at == high or germ.right_poly(germ.at) == germ.point_value
    return from_left and from_right


def _check_linear_and_continuous(f: PiecewiseFn, low: Fraction,
                                 high: Fraction):
    if not f.is_piecewise_linear():
        degrees = [piece.degree for piece in f.pieces]
        raise NotPiecewiseLinear(
            f"All pieces must have degree at most 1, but degrees are "
            f"{degrees}",
            witness=tuple(degrees))
    jumps = [
        point
        for point in f.breakpoints
        if low <= point <= high
        and not _continuous_within(germ_at(f, point), low, high)
    ]
    if jumps:
        raise NotContinuousOnInterval(
            f"The function is not continuous at "
            f"{', '.join(map(format_rational, jumps))}",
            witness=tuple(map(format_rational, jumps)))


def _segment_points(f: PiecewiseFn, low: Fraction, high: Fraction
                    ) -> List[Fraction]:
    return [low] + [
        point
        for point in f.breakpoints
        if low < point < high
    ] + [high]


def ivt_witness(f: PiecewiseFn, a: Rational, b: Rational, c: Rational
                ) -> Fraction:
    """
    The leftmost `x` in `[a, b]` with `f(x) = c`, for a piecewise-linear `f`
    that is continuous on `[a, b]`

    >>> ivt_witness(PiecewiseFn.polynomial(Polynomial.parse("-1,2")), 0, 2, 0)
    Fraction(1, 2)
    >>> ivt_witness(absolute_value(), -1, "1/2", "1/2")
    Fraction(-1, 2)
    >>> ivt_witness(absolute_value(), -1, 1, 1)
    Fraction(-1, 1)
    >>> ivt_witness(absolute_value(), -1, 1, 2)
    Traceback (most recent call last):
    ...
    aristo.errors.TargetOutOfRange: ...
    >>> ivt_witness(heaviside(), 0, 1, 1)
    Fraction(0, 1)
    >>> ivt_witness(heaviside(), -1, 1, "1/2")
    Traceback (most recent call last):
    ...
    aristo.errors.NotContinuousOnInterval: ...
    """
    a, b, c = map(parse_rational, (a, b, c))
    if a > b:
        raise TargetOutOfRange(
            f"Empty interval [{format_rational(a)}, {format_rational(b)}]",
            witness=(format_rational(a), format_rational(b)))
    _check_linear_and_continuous(f, a, b)
    f_a, f_b = f(a), f(b)
    if not (min(f_a, f_b) <= c <= max(f_a, f_b)):
        raise TargetOutOfRange(
            f"{format_rational(c)} is not between f(a) = "
            f"{format_rational(f_a)} and f(b) = {format_rational(f_b)}",
            witness=(format_rational(c), format_rational(f_a),
                     format_rational(f_b)))
    points = _segment_points(f, a, b)
    for low, high in zip(points, points[1:]):
        f_low, f_high = f(low), f(high)
        if f_low == c:
            return low
        if min(f_low, f_high) < c < max(f_low, f_high):
            return low + (c - f_low) * (high - low) / (f_high - f_low)
    return b


def image_of_interval(f: PiecewiseFn, a: Rational, b: Rational
                      ) -> Tuple[Fraction, Fraction]:
    """
    The image of `[a, b]` under a continuous piecewise-linear `f`, which is
    itself a closed bounded interval

    >>> image_of_interval(absolute_value(), -1, 2)
    (Fraction(0, 1), Fraction(2, 1))
    """
    a, b = map(parse_rational, (a, b))
    if a > b:
        raise TargetOutOfRange(
            f"Empty interval [{format_rational(a)}, {format_rational(b)}]",
            witness=(format_rational(a), format_rational(b)))
    _check_linear_and_continuous(f, a, b)
    values = [f(point) for point in _segment_points(f, a, b)]
    return min(values), max(values)

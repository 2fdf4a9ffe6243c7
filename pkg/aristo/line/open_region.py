"""
Open subsets of the rational line that are finite unions of open intervals.

Regions are kept in canonical form: sorted, non-empty, pairwise disjoint
intervals, where two intervals that share an endpoint stay separate, since
that endpoint is not in the region.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator, List, Optional, Tuple, Union

from aristo.errors import (
    MalformedRegion, PointNotInteriorToRegion, InputParseError,
)
from aristo.line.rationals import (
    Endpoint, Infinity, NEG_INF, POS_INF, parse_endpoint, format_endpoint,
    is_finite, parse_rational, format_rational,
)

__all__ = [
    'Interval', 'OpenRegion', 'interval_midpoint', 'region_meet',
    'region_join', 'region_not', 'region_implies', 'region_boundary',
    'divide', 'divide_at_point', 'is_compact_complement', 'region_contains',
    'region_leq', 'region_is_dense_in', 'scale_region', 'halving_chain',
    'interior_of',
]

Interval = Tuple[Endpoint, Endpoint]
IntervalLike = Tuple[Union[str, int, Fraction, Infinity],
                     Union[str, int, Fraction, Infinity]]


def interval_midpoint(low: Endpoint, high: Endpoint) -> Fraction:
    """
    A rational strictly inside the open interval `(low, high)`

    >>> interval_midpoint(Fraction(0), Fraction(1))
    Fraction(1, 2)
    >>> interval_midpoint(NEG_INF, Fraction(3)), \\
    ...     interval_midpoint(Fraction(3), POS_INF)
    (Fraction(2, 1), Fraction(4, 1))
    >>> interval_midpoint(NEG_INF, POS_INF)
    Fraction(0, 1)
    """
    if is_finite(low) and is_finite(high):
        return (low + high) / 2
    if is_finite(high):
        return high - 1
    if is_finite(low):
        return low + 1
    return Fraction(0)


def _sorted_breakpoints(values: Iterable[Endpoint]) -> List[Fraction]:
    return sorted({value for value in values if is_finite(value)})


def interior_of(contains: Callable[[Fraction], bool],
                breakpoints: Iterable[Endpoint]) -> 'OpenRegion':
    """
    The interior of a set, given its membership and the finite points where
    membership may change

    >>> interior_of(lambda x: x != 0, [Fraction(0)])
    OpenRegion(intervals=((-inf, Fraction(0, 1)), (Fraction(0, 1), +inf)))
    >>> interior_of(lambda x: x >= 0, [Fraction(0)])
    OpenRegion(intervals=((Fraction(0, 1), +inf),))
    """
    points = _sorted_breakpoints(breakpoints)
    bounds: List[Endpoint] = [NEG_INF] + points + [POS_INF]
    segments = [
        (low, high, contains(interval_midpoint(low, high)))
        for low, high in zip(bounds, bounds[1:])
    ]
    intervals = []
    current_low: Optional[Endpoint] = None
    for index, (low, high, inside) in enumerate(segments):
        if not inside:
            continue
        if current_low is None:
            current_low = low
        is_last = index == len(segments) - 1
        joins_next = (
            not is_last
            and segments[index + 1][2]
            and contains(high)
        )
        if joins_next:
            continue
        intervals.append((current_low, high))
        current_low = None
    return OpenRegion(tuple(intervals))


@dataclass(frozen=True)
class OpenRegion:
    """
    A canonical finite union of open intervals

    >>> OpenRegion.from_intervals([("1", "2"), ("0", "3/2"), ("5", "6")])
    OpenRegion(intervals=((Fraction(0, 1), Fraction(2, 1)),
                          (Fraction(5, 1), Fraction(6, 1))))
    >>> str(OpenRegion.from_intervals([(0, 1), (1, "+inf")]))
    '(0, 1) u (1, +inf)'
    >>> str(OpenRegion.empty()), str(OpenRegion.full())
    ('{}', '(-inf, +inf)')
    """
    intervals: Tuple[Interval, ...]

    @classmethod
    def from_intervals(cls, intervals: Iterable[IntervalLike]
                       ) -> 'OpenRegion':
        return cls(canonicalise(intervals))

    @classmethod
    def empty(cls) -> 'OpenRegion':
        return cls(())

    @classmethod
    def full(cls) -> 'OpenRegion':
        return cls(((NEG_INF, POS_INF),))

    @classmethod
    def interval(cls, low, high) -> 'OpenRegion':
        return cls.from_intervals([(low, high)])

    @classmethod
    def parse(cls, text: str) -> 'OpenRegion':
        """
        >>> str(OpenRegion.parse("(0,1) u (2, +inf)"))
        '(0, 1) u (2, +inf)'
        >>> OpenRegion.parse("{}") == OpenRegion.parse("") == OpenRegion.empty()
        True
        >>> OpenRegion.parse("[0, 1)")
        Traceback (most recent call last):
        ...
        aristo.errors.InputParseError: ...
        """
        text = text.strip()
        if text in ('', '{}'):
            return cls.empty()
        intervals = []
        for part in text.replace('U', 'u').split('u'):
            part = part.strip()
            if not (part.startswith('(') and part.endswith(')')):
                raise InputParseError(
                    f"Expected an open interval like '(0, 1)', not '{part}'",
                    position=part)
            bounds = part[1:-1].split(',')
            if len(bounds) != 2:
                raise InputParseError(
                    f"An interval needs exactly two endpoints: '{part}'",
                    position=part)
            intervals.append(tuple(bounds))
        return cls.from_intervals(intervals)

    @classmethod
    def deserialise(cls, serialised) -> 'OpenRegion':
        if isinstance(serialised, str):
            return cls.parse(serialised)
        if isinstance(serialised, dict):
            serialised = serialised.get('intervals')
        if not isinstance(serialised, list):
            raise InputParseError(
                f"Expected a list of intervals, not {serialised!r}")
        intervals = []
        for item in serialised:
            if isinstance(item, dict):
                if set(item) != {'lo', 'hi'}:
                    raise InputParseError(
                        f"An interval needs 'lo' and 'hi': {item!r}")
                intervals.append((item['lo'], item['hi']))
            elif isinstance(item, list) and len(item) == 2:
                intervals.append(tuple(item))
            else:
                raise InputParseError(f"Malformed interval {item!r}")
        return cls.from_intervals(intervals)

    def serialise(self):
        return {
            'intervals': [
                {'lo': format_endpoint(low), 'hi': format_endpoint(high)}
                for low, high in self.intervals
            ],
        }

    def __str__(self) -> str:
        if not self.intervals:
            return '{}'
        return ' u '.join(
            f"({format_endpoint(low)}, {format_endpoint(high)})"
            for low, high in self.intervals
        )

    def __contains__(self, point) -> bool:
        point = parse_rational(point)
        return any(low < point < high for low, high in self.intervals)

    def __bool__(self) -> bool:
        return bool(self.intervals)

    @property
    def finite_endpoints(self) -> List[Fraction]:
        return _sorted_breakpoints(
            endpoint
            for interval in self.intervals
            for endpoint in interval
        )

    def interval_containing(self, point: Fraction) -> Optional[Interval]:
        for low, high in self.intervals:
            if low < point < high:
                return low, high
        return None

    def is_full(self) -> bool:
        return self.intervals == ((NEG_INF, POS_INF),)

    def sample_points(self) -> Iterator[Fraction]:
        for low, high in self.intervals:
            yield interval_midpoint(low, high)


def canonicalise(intervals: Iterable[IntervalLike]) -> Tuple[Interval, ...]:
    """
    >>> canonicalise([(0, 2), (1, 3), (3, 4), ("-inf", -5)])
    ((-inf, Fraction(-5, 1)), (Fraction(0, 1), Fraction(3, 1)),
     (Fraction(3, 1), Fraction(4, 1)))
    >>> canonicalise([(2, 1)])
    Traceback (most recent call last):
    ...
    aristo.errors.MalformedRegion: An interval must start below its end: (2, 1)
    >>> canonicalise([("+inf", 1)])
    Traceback (most recent call last):
    ...
    aristo.errors.MalformedRegion: ...
    """
    parsed = []
    for low, high in intervals:
        low, high = parse_endpoint(low), parse_endpoint(high)
        witness = (format_endpoint(low), format_endpoint(high))
        if low == POS_INF or high == NEG_INF:
            raise MalformedRegion(
                f"An interval can't start at +inf or end at -inf: "
                f"({witness[0]}, {witness[1]})",
                witness=witness)
        if not low < high:
            raise MalformedRegion(
                f"An interval must start below its end: "
                f"({witness[0]}, {witness[1]})",
                witness=witness)
        parsed.append((low, high))
    parsed.sort(key=lambda interval: (interval[0], interval[1]))
    merged: List[Interval] = []
    for low, high in parsed:
        if merged and low < merged[-1][1]:
            merged[-1] = (merged[-1][0], max(merged[-1][1], high))
        else:
            merged.append((low, high))
    return tuple(merged)


def _breakpoints(*regions: OpenRegion) -> List[Fraction]:
    return [
        endpoint
        for region in regions
        for endpoint in region.finite_endpoints
    ]


def region_meet(first: OpenRegion, second: OpenRegion) -> OpenRegion:
    """
    >>> str(region_meet(OpenRegion.parse("(0, 2) u (3, 5)"),
    ...                 OpenRegion.parse("(1, 4)")))
    '(1, 2) u (3, 4)'
    """
    return interior_of(
        lambda x: x in first and x in second, _breakpoints(first, second))


def region_join(first: OpenRegion, second: OpenRegion) -> OpenRegion:
    """
    >>> str(region_join(OpenRegion.parse("(0, 1)"),
    ...                 OpenRegion.parse("(1, 2)")))
    '(0, 1) u (1, 2)'
    """
    return interior_of(
        lambda x: x in first or x in second, _breakpoints(first, second))


def region_not(region: OpenRegion) -> OpenRegion:
    """
    The interior of the complement

    >>> str(region_not(OpenRegion.parse("(0, 1) u (1, 2)")))
    '(-inf, 0) u (2, +inf)'
    >>> str(region_not(OpenRegion.empty())), str(region_not(OpenRegion.full()))
    ('(-inf, +inf)', '{}')
    """
    return interior_of(lambda x: x not in region, _breakpoints(region))


def region_implies(first: OpenRegion, second: OpenRegion) -> OpenRegion:
    """
    The interior of the complement of `first` joined with `second`

    >>> str(region_implies(OpenRegion.parse("(0, 2)"),
    ...                    OpenRegion.parse("(1, 3)")))
    '(-inf, 0) u (1, +inf)'
    >>> region_implies(OpenRegion.parse("(0, 1)"), OpenRegion.parse("(-1, 2)"))\\
    ...     .is_full()
    True
    """
    return interior_of(
        lambda x: x not in first or x in second,
        _breakpoints(first, second))


def region_boundary(region: OpenRegion) -> List[Fraction]:
    """
    >>> list(map(str, region_boundary(OpenRegion.parse("(0,1) u (1,2)"))))
    ['0', '1', '2']
    >>> region_boundary(OpenRegion.full())
    []
    """
    return region.finite_endpoints


def divide(region: OpenRegion, at) -> Tuple[OpenRegion, OpenRegion]:
    """
    Split a region at an interior point into the parts before and after it

    >>> left, right = divide(OpenRegion.parse("(0, 1)"), "1/2")
    >>> str(left), str(right)
    ('(0, 1/2)', '(1/2, 1)')
    >>> divide(OpenRegion.parse("(0, 1)"), 1)
    Traceback (most recent call last):
    ...
    aristo.errors.PointNotInteriorToRegion: ...
    """
    point = parse_rational(at)
    if point not in region:
        raise PointNotInteriorToRegion(
            f"{format_rational(point)} is not inside {region}",
            witness=(format_rational(point),))
    return (
        region_meet(region, OpenRegion(((NEG_INF, point),))),
        region_meet(region, OpenRegion(((point, POS_INF),))),
    )


def divide_at_point(point) -> Tuple[OpenRegion, OpenRegion]:
    """
    The two open rays on either side of a point, which both have the point on
    their boundary

    >>> left, right = divide_at_point(0)
    >>> str(left), str(right)
    ('(-inf, 0)', '(0, +inf)')
    """
    point = parse_rational(point)
    return OpenRegion(((NEG_INF, point),)), OpenRegion(((point, POS_INF),))


def is_compact_complement(region: OpenRegion) -> bool:
    """
    Whether the complement is bounded, ie the region contains both rays

    >>> is_compact_complement(OpenRegion.parse("(-inf, 0) u (1, +inf)"))
    True
    >>> is_compact_complement(OpenRegion.parse("(0, 1)"))
    False
    >>> is_compact_complement(OpenRegion.full()), \\
    ...     is_compact_complement(OpenRegion.empty())
    (True, False)
    """
    if not region.intervals:
        return False
    return (
        region.intervals[0][0] == NEG_INF
        and region.intervals[-1][1] == POS_INF
    )


def region_contains(region: OpenRegion, point) -> bool:
    return point in region


def region_leq(first: OpenRegion, second: OpenRegion) -> bool:
    """
    >>> region_leq(OpenRegion.parse("(0, 1) u (1, 2)"),
    ...            OpenRegion.parse("(0, 2)"))
    True
    >>> region_leq(OpenRegion.parse("(0, 2)"),
    ...            OpenRegion.parse("(0, 1) u (1, 2)"))
    False
    """
    return all(
        any(
            other_low <= low and high <= other_high
            for other_low, other_high in second.intervals
        )
        for low, high in first.intervals
    )


def region_is_dense_in(inner: OpenRegion, outer: OpenRegion) -> bool:
    """
    Whether `inner` meets every non-empty open part of `outer`

    >>> region_is_dense_in(OpenRegion.parse("(0, 1) u (1, 2)"),
    ...                    OpenRegion.parse("(0, 2)"))
    True
    >>> region_is_dense_in(OpenRegion.parse("(0, 1)"),
    ...                    OpenRegion.parse("(0, 2)"))
    False
    """
    return not region_meet(outer, region_not(inner))


def scale_region(region: OpenRegion, factor) -> OpenRegion:
    """
    >>> str(scale_region(OpenRegion.parse("(0, 1) u (2, +inf)"), "1/2"))
    '(0, 1/2) u (1, +inf)'
    """
    factor = parse_rational(factor)
    if factor <= 0:
        raise MalformedRegion(
            f"Can only scale by a positive factor, not "
            f"{format_rational(factor)}",
            witness=(format_rational(factor),))
    return OpenRegion(tuple(
        (
            low * factor if is_finite(low) else low,
            high * factor if is_finite(high) else high,
        )
        for low, high in region.intervals
    ))


def halving_chain(region: OpenRegion, steps: Optional[int] = None
                  ) -> Iterator[OpenRegion]:
    """
    Repeatedly divide the first interval at its midpoint, and keep the lower
    part, either forever or for a number of steps

    >>> list(map(str, halving_chain(OpenRegion.parse("(0, 1)"), 3)))
    ['(0, 1)', '(0, 1/2)', '(0, 1/4)', '(0, 1/8)']
    >>> list(map(str, halving_chain(OpenRegion.empty(), 2)))
    ['{}']
    """
    yield region
    step = 0
    while region.intervals and (steps is None or step < steps):
        low, high = region.intervals[0]
        region, _ = divide(region, interval_midpoint(low, high))
        yield region
        step += 1

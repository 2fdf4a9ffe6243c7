"""
Seeded random canonical regions and cut points, for sampled checks.
"""
import random
from fractions import Fraction
from typing import Iterator, List, Optional

from aristo.errors import EmptySampleRegion
from aristo.line.open_region import OpenRegion, interval_midpoint
from aristo.line.rationals import NEG_INF, POS_INF, Endpoint

__all__ = [
    'random_rational', 'random_region', 'random_regions', 'random_cut_point',
]


def random_rational(rng: random.Random, bound: int = 10,
                    max_denominator: int = 8) -> Fraction:
    denominator = rng.randint(1, max_denominator)
    return Fraction(
        rng.randint(-bound * denominator, bound * denominator), denominator)


def random_region(rng: random.Random, max_intervals: int = 3,
                  infinite_chance: float = 0.25,
                  allow_empty: bool = True) -> OpenRegion:
    """
    >>> random_region(random.Random(3)) == random_region(random.Random(3))
    True
    >>> all(
    ...     random_region(random.Random(seed), allow_empty=False)
    ...     for seed in range(50))
    True
    """
    minimum = 1 if not allow_empty else 0
    while True:
        interval_count = rng.randint(minimum, max_intervals)
        endpoints: List[Endpoint] = sorted({
            random_rational(rng)
            for _ in range(interval_count * 2)
        })
        if len(endpoints) % 2:
            endpoints.pop()
        if endpoints and rng.random() < infinite_chance:
            endpoints[0] = NEG_INF
        if endpoints and rng.random() < infinite_chance:
            endpoints[-1] = POS_INF
        region = OpenRegion.from_intervals(
            zip(endpoints[::2], endpoints[1::2]))
        if region or allow_empty:
            return region


def random_regions(seed: int, count: int, **kwargs) -> Iterator[OpenRegion]:
    rng = random.Random(seed)
    for _ in range(count):
        yield random_region(rng, **kwargs)


def random_cut_point(rng: random.Random, region: OpenRegion,
                     max_denominator: int = 8) -> Fraction:
    """
    A random rational strictly inside the region

    >>> region = OpenRegion.parse("(0, 1) u (5, +inf)")
    >>> rng = random.Random(0)
    >>> all(random_cut_point(rng, region) in region for _ in range(100))
    True
    >>> random_cut_point(rng, OpenRegion.empty())
    Traceback (most recent call last):
    ...
    aristo.errors.EmptySampleRegion: ...
    """
    if not region:
        raise EmptySampleRegion("Can't pick a point in an empty region")
    low, high = rng.choice(region.intervals)
    middle = interval_midpoint(low, high)
    offset: Optional[Fraction] = None
    if isinstance(low, Fraction) and isinstance(high, Fraction):
        width = high - low
        offset = width * Fraction(
            rng.randint(1, 2 * max_denominator - 1),
            2 * max_denominator) - width / 2
    elif isinstance(low, Fraction):
        offset = Fraction(rng.randint(0, 8 * max_denominator),
                          max_denominator)
    elif isinstance(high, Fraction):
        offset = -Fraction(rng.randint(0, 8 * max_denominator),
                           max_denominator)
    else:
        offset = Fraction(rng.randint(-10 * max_denominator,
                                      10 * max_denominator),
                          max_denominator)
    return middle + offset

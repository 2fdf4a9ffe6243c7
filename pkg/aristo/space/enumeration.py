"""
Enumeration of every topology on a small number of points.

Every finite topology is the Alexandrov topology of its specialisation
preorder, so enumerating preorders enumerates topologies exactly once.
"""
from functools import lru_cache
from itertools import permutations, product
from typing import Iterable, Tuple

from aristo.space.finite_space import FiniteSpace

__all__ = ['all_preorders', 'all_spaces', 'all_spaces_up_to_homeomorphism']


def default_points(point_count: int) -> Tuple[str, ...]:
    """
    >>> default_points(3)
    ('a', 'b', 'c')
    """
    return tuple('abcdefgh'[:point_count])


def all_preorders(point_count: int
                  ) -> Iterable[Tuple[Tuple[int, int], ...]]:
    """
    All reflexive and transitive relations on `range(point_count)`, as the
    tuple of their non-reflexive pairs

    >>> len(list(all_preorders(2))), len(list(all_preorders(3)))
    (4, 29)
    """
    off_diagonal = [
        (first, second)
        for first, second in product(range(point_count), repeat=2)
        if first != second
    ]
    for included in product((False, True), repeat=len(off_diagonal)):
        pairs = {
            pair
            for pair, is_included in zip(off_diagonal, included)
            if is_included
        }
        if all(
            (first, third) in pairs
            for first, second in pairs
            for second_, third in pairs
            if second == second_ and first != third
        ):
            yield tuple(sorted(pairs))


@lru_cache(maxsize=None)
def all_spaces(point_count: int) -> Tuple[FiniteSpace, ...]:
    """
    Every topology on `point_count` labelled points

    >>> len(all_spaces(1)), len(all_spaces(2)), len(all_spaces(3))
    (1, 4, 29)
    """
    points = default_points(point_count)
    return tuple(
        FiniteSpace.from_preorder(points, [
            (points[first], points[second])
            for first, second in preorder
        ])
        for preorder in all_preorders(point_count)
    )


def canonical_form(space: FiniteSpace) -> Tuple[Tuple[int, ...], ...]:
    """The smallest relabelling of the opens, over all point permutations"""
    indexes = range(len(space.points))
    return min(
        tuple(sorted(
            tuple(sorted(
                permutation[space.points.index(point)]
                for point in _open
            ))
            for _open in space.opens
        ))
        for permutation in permutations(indexes)
    )


@lru_cache(maxsize=None)
def all_spaces_up_to_homeomorphism(point_count: int,
                                   ) -> Tuple[FiniteSpace, ...]:
    """
    >>> len(all_spaces_up_to_homeomorphism(2))
    3
    >>> len(all_spaces_up_to_homeomorphism(3))
    9
    """
    seen = set()
    spaces = []
    for space in all_spaces(point_count):
        form = canonical_form(space)
        if form in seen:
            continue
        seen.add(form)
        spaces.append(space)
    return tuple(spaces)

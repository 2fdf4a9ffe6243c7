"""
Maps between the points of finite spaces, and their continuity.
"""
from dataclasses import dataclass
from typing import Dict, Iterable, Optional, Tuple

from aristo.errors import InvalidPointMap, NotAHomeomorphism
from aristo.space.finite_space import FiniteSpace, PointSet

__all__ = ['PointMap', 'is_continuous', 'image_is_connected']


@dataclass(frozen=True)
class PointMap:
    """
    A total map from the points of `source` to the points of `target`

    >>> from aristo.space import sierpinski
    >>> swap = PointMap.build(sierpinski(), sierpinski(), {'p': 'q', 'q': 'p'})
    >>> swap.is_continuous()
    (False, '{p}')
    >>> PointMap.build(sierpinski(), sierpinski(), {'p': 'q'})
    Traceback (most recent call last):
    ...
    aristo.errors.InvalidPointMap: ...
    """
    source: FiniteSpace
    target: FiniteSpace
    assignment: Tuple[Tuple[str, str], ...]

    @classmethod
    def build(cls, source: FiniteSpace, target: FiniteSpace,
              assignment: Dict[str, str]) -> 'PointMap':
        missing = [
            point
            for point in source.points
            if point not in assignment
        ]
        if missing:
            raise InvalidPointMap(
                f"The map is not defined on: {', '.join(missing)}",
                witness=tuple(missing))
        extra = sorted(set(assignment) - set(source.points))
        if extra:
            raise InvalidPointMap(
                f"The map mentions unknown source points: "
                f"{', '.join(extra)}", witness=tuple(extra))
        outside = [
            point
            for point in source.points
            if assignment[point] not in target.points
        ]
        if outside:
            raise InvalidPointMap(
                f"The map sends points outside the target: "
                f"{', '.join(outside)}", witness=tuple(outside))
        return cls(source, target, tuple(
            (point, assignment[point])
            for point in source.points
        ))

    @classmethod
    def identity(cls, space: FiniteSpace) -> 'PointMap':
        return cls.build(space, space, {point: point for point in space.points})

    @property
    def mapping(self) -> Dict[str, str]:
        return dict(self.assignment)

    def __call__(self, point: str) -> str:
        return self.mapping[point]

    def image(self, point_set: Iterable[str]) -> PointSet:
        point_set = self.source.check_points(point_set)
        mapping = self.mapping
        return frozenset(mapping[point] for point in point_set)

    def preimage(self, point_set: Iterable[str]) -> PointSet:
        point_set = self.target.check_points(point_set)
        return frozenset(
            point
            for point, value in self.assignment
            if value in point_set
        )

    def is_continuous(self) -> Tuple[bool, Optional[str]]:
        """
        Whether every open of the target has an open preimage; otherwise also
        return the first target open that fails, as a witness
        """
        for _open in self.target.opens:
            if not self.source.is_open(self.preimage(_open)):
                return False, self.target.label(_open)
        return True, None

    def is_bijective(self) -> bool:
        values = [value for _, value in self.assignment]
        return (
            len(set(values)) == len(values)
            and set(values) == set(self.target.points)
        )

    def inverse(self) -> 'PointMap':
        if not self.is_bijective():
            raise NotAHomeomorphism(
                "The map is not a bijection", witness=self.assignment)
        return type(self).build(self.target, self.source, {
            value: point
            for point, value in self.assignment
        })

    def is_homeomorphism(self) -> bool:
        """
        >>> from aristo.space import FiniteSpace
        >>> space = FiniteSpace.validate(['1', '2', '3'], [
        ...     [], ['1'], ['3'], ['1', '3'], ['1', '2', '3']])
        >>> PointMap.build(space, space, {'1': '3', '2': '2', '3': '1'})\\
        ...     .is_homeomorphism()
        True
        """
        if not self.is_bijective():
            return False
        is_forward_continuous, _ = self.is_continuous()
        is_backward_continuous, _ = self.inverse().is_continuous()
        return is_forward_continuous and is_backward_continuous

    def check_homeomorphism(self) -> None:
        if not self.is_bijective():
            raise NotAHomeomorphism(
                "The map is not a bijection", witness=self.assignment)
        is_continuous_, witness = self.is_continuous()
        if not is_continuous_:
            raise NotAHomeomorphism(
                f"The map is not continuous at {witness}", witness=(witness,))
        is_continuous_, witness = self.inverse().is_continuous()
        if not is_continuous_:
            raise NotAHomeomorphism(
                f"The inverse map is not continuous at {witness}",
                witness=(witness,))

    def serialise(self) -> dict:
        return {"map": self.mapping}


def is_continuous(point_map: PointMap) -> Tuple[bool, Optional[str]]:
    return point_map.is_continuous()


def image_is_connected(point_map: PointMap, _open: Iterable[str]) -> bool:
    """
    The image of `_open` can't be split by two target opens that are disjoint
    on it, both meeting it.

    >>> from aristo.space import sierpinski, discrete
    >>> to_discrete = PointMap.build(
    ...     sierpinski(), discrete(['p', 'q']), {'p': 'p', 'q': 'q'})
    >>> image_is_connected(to_discrete, {'p', 'q'})
    False
    """
    image = point_map.image(_open)
    target = point_map.target
    for first in target.opens:
        for second in target.opens:
            first_part = first & image
            second_part = second & image
            if not first_part or not second_part:
                continue
            if first_part & second_part:
                continue
            if first_part | second_part == image:
                return False
    return True

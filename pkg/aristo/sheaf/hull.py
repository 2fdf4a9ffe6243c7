from typing import Iterable, List

from aristo.errors import NotAHomeomorphism
from aristo.space import FiniteSpace, PointMap, PointSet

__all__ = ['invariant_opens', 'invariant_hull']


def invariant_opens(space: FiniteSpace, phi: PointMap) -> List[PointSet]:
    """
    >>> from aristo.space import FiniteSpace, PointMap
    >>> space = FiniteSpace.validate(['1', '2', '3'], [
    ...     [], ['1'], ['3'], ['1', '3'], ['1', '2', '3']])
    >>> swap = PointMap.build(space, space, {'1': '3', '2': '2', '3': '1'})
    >>> [space.label(_open) for _open in invariant_opens(space, swap)]
    ['{}', '{1,3}', '{1,2,3}']
    """
    return [
        _open
        for _open in space.opens
        if phi.image(_open) == _open
    ]


def invariant_hull(space: FiniteSpace, phi: PointMap,
                   point_set: Iterable[str]) -> PointSet:
    """
    The smallest open that contains the set, and that the homeomorphism maps
    onto itself

    >>> from aristo.space import FiniteSpace, PointMap
    >>> space = FiniteSpace.validate(['1', '2', '3'], [
    ...     [], ['1'], ['3'], ['1', '3'], ['1', '2', '3']])
    >>> swap = PointMap.build(space, space, {'1': '3', '2': '2', '3': '1'})
    >>> space.label(invariant_hull(space, swap, {'1'}))
    '{1,3}'
    >>> space.label(invariant_hull(space, swap, {'2'}))
    '{1,2,3}'
    """
    if phi.source != space or phi.target != space:
        raise NotAHomeomorphism(
            "The map must be from the space to itself", witness=())
    phi.check_homeomorphism()
    point_set = space.check_points(point_set)
    hull = space.full
    for _open in invariant_opens(space, phi):
        if point_set <= _open:
            hull &= _open
    return hull

"""
Stalks: germs of sections around a point, or around a closed set.

Two sections are the same germ when they agree on some smaller neighbourhood.
In a finite space there is a smallest neighbourhood, so the germs are exactly
the sections there; `stalk_by_quotient` computes the germs directly, and is
used to check that.
"""
from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple

import networkx as nx

from aristo.errors import NotClosed, EmptySubset, UnknownPoint
from aristo.sheaf.presheaf import Presheaf, Section
from aristo.space import PointSet

__all__ = [
    'GermClass', 'Stalk', 'stalk_by_quotient', 'stalk_at_point', 'topos_of',
]

Member = Tuple[str, Section]


@dataclass(frozen=True)
class GermClass:
    members: Tuple[Member, ...]
    canonical: Section

    def serialise(self) -> dict:
        return {
            'members': [list(member) for member in self.members],
            'canonical': self.canonical,
        }


@dataclass(frozen=True)
class Stalk:
    """
    The germ classes over the neighbourhoods of `at`, with the section on the
    smallest neighbourhood that each class corresponds to
    """
    at: str
    canonical_open: str
    classes: Tuple[GermClass, ...]

    @property
    def canonical_sections(self) -> Tuple[Section, ...]:
        return tuple(germ.canonical for germ in self.classes)

    def member_sets(self) -> List[frozenset]:
        return [frozenset(germ.members) for germ in self.classes]

    def serialise(self) -> dict:
        return {
            'at': self.at,
            'canonical_open': self.canonical_open,
            'canonical_sections': list(self.canonical_sections),
            'classes': [germ.serialise() for germ in self.classes],
        }


def stalk_by_quotient(presheaf: Presheaf, neighbourhoods: Sequence[PointSet]
                      ) -> List[frozenset]:
    """
    The germ classes by brute force: join `(U, s)` and `(V, t)` if some
    neighbourhood `W` inside both has `s|W = t|W`

    >>> from aristo.sheaf.constructors import sierpinski_presheaf
    >>> presheaf = sierpinski_presheaf()
    >>> classes = stalk_by_quotient(
    ...     presheaf, [frozenset('p'), frozenset('pq')])
    >>> [sorted(germ) for germ in classes]
    [[('{p,q}', 's1'), ('{p,q}', 's2'), ('{p}', 't')]]
    """
    space = presheaf.space
    indices = [space.opens.index(_open) for _open in neighbourhoods]
    graph = nx.Graph()
    for index in indices:
        for section in presheaf.sections[index]:
            graph.add_node((index, section))
    for first in indices:
        for second in indices:
            for middle in indices:
                middle_open = space.opens[middle]
                if not (middle_open <= space.opens[first]
                        and middle_open <= space.opens[second]):
                    continue
                by_germ: Dict[Section, List[Tuple[int, Section]]] = {}
                for index in (first, second):
                    for section in presheaf.sections[index]:
                        germ = presheaf.restrict(index, middle, section)
                        by_germ.setdefault(germ, []).append((index, section))
                for nodes in by_germ.values():
                    for node in nodes[1:]:
                        graph.add_edge(nodes[0], node)
    classes = [
        frozenset(
            (space.label(space.opens[index]), section)
            for index, section in component
        )
        for component in nx.connected_components(graph)
    ]
    return sorted(classes, key=sorted)


def _stalk_over(presheaf: Presheaf, at: str, point_set: Iterable[str]
                ) -> Stalk:
    space = presheaf.space
    neighbourhoods = space.neighbourhoods(point_set)
    smallest = space.minimal_open_superset(point_set)
    smallest_index = space.opens.index(smallest)
    classes = []
    for canonical in presheaf.sections[smallest_index]:
        members = tuple(
            (space.label(_open), section)
            for _open in neighbourhoods
            for index in [space.opens.index(_open)]
            for section in presheaf.sections[index]
            if presheaf.restrict(index, smallest_index, section) == canonical
        )
        classes.append(GermClass(members, canonical))
    return Stalk(at, space.label(smallest), tuple(classes))


def stalk_at_point(presheaf: Presheaf, point: str) -> Stalk:
    """
    >>> from aristo.sheaf.constructors import sierpinski_presheaf
    >>> presheaf = sierpinski_presheaf()
    >>> stalk_at_point(presheaf, 'p').canonical_sections
    ('t',)
    >>> stalk_at_point(presheaf, 'q').canonical_sections
    ('s1', 's2')
    >>> stalk_at_point(presheaf, 'r')
    Traceback (most recent call last):
    ...
    aristo.errors.UnknownPoint: ...
    """
    if point not in presheaf.space.points:
        raise UnknownPoint(f"Unknown point '{point}'", witness=(point,))
    return _stalk_over(presheaf, point, {point})


def topos_of(presheaf: Presheaf, closed_set: Iterable[str]) -> Stalk:
    """
    The germs of sections around a closed set

    >>> from aristo.sheaf.constructors import sierpinski_presheaf
    >>> presheaf = sierpinski_presheaf()
    >>> topos_of(presheaf, {'q'}).canonical_sections
    ('s1', 's2')
    >>> topos_of(presheaf, {'p'})
    Traceback (most recent call last):
    ...
    aristo.errors.NotClosed: ...
    """
    space = presheaf.space
    closed_set = space.check_points(closed_set)
    if not closed_set:
        raise EmptySubset("The closed set must not be empty", witness=())
    if not space.is_closed(closed_set):
        raise NotClosed(
            f"{space.label(closed_set)} is not closed",
            witness=(space.label(closed_set),))
    return _stalk_over(presheaf, space.label(closed_set), closed_set)

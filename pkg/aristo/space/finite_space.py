"""
Finite topological spaces with an explicit family of opens.

The main entry points are `validate_space` and `alexandrov_from_preorder`.
"""
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import FrozenSet, Iterable, List, Sequence, Tuple

import networkx as nx

from aristo.errors import MissingEmptyOrFull, NotClosedUnderUnion, \
    NotClosedUnderIntersection, OpenMentionsUnknownPoint, NotAPreorder, \
    UnknownPoint, NotAnOpen

__all__ = [
    'FiniteSpace', 'PointSet', 'validate_space', 'alexandrov_from_preorder',
    'interior', 'closure', 'boundary', 'is_connected_open', 'components',
    'opens_lattice', 'sierpinski', 'discrete', 'coarse', 'label_for_set',
]

Point = str
PointSet = FrozenSet[Point]


def label_for_set(points: Iterable[Point], order: Sequence[Point]) -> str:
    """
    The element label of an open in its opens-lattice

    >>> label_for_set({'q', 'p'}, ['p', 'q'])
    '{p,q}'
    >>> label_for_set([], ['p', 'q'])
    '{}'
    """
    points = set(points)
    return "{" + ",".join(
        point
        for point in order
        if point in points
    ) + "}"


@dataclass(frozen=True)
class FiniteSpace:
    """
    A finite set of points, with a family of opens that contains the empty and
    the full set, and is closed under unions and intersections.

    >>> space = sierpinski()
    >>> space.points
    ('p', 'q')
    >>> [space.label(_open) for _open in space.opens]
    ['{}', '{p}', '{p,q}']
    """
    points: Tuple[Point, ...]
    opens: Tuple[PointSet, ...]
    open_set: FrozenSet[PointSet] = field(
        default=None, repr=False, compare=False)

    def __post_init__(self):
        if self.open_set is None:
            object.__setattr__(self, 'open_set', frozenset(self.opens))

    @classmethod
    def validate(cls, points: Sequence[Point],
                 opens: Iterable[Iterable[Point]]) -> 'FiniteSpace':
        """
        >>> FiniteSpace.validate(['p', 'q'], [[], ['p'], ['q']])
        Traceback (most recent call last):
        ...
        aristo.errors.MissingEmptyOrFull: ...
        >>> FiniteSpace.validate(['p', 'q', 'r'], [[], ['p'], ['q'],
        ...     ['p', 'q', 'r']])
        Traceback (most recent call last):
        ...
        aristo.errors.NotClosedUnderUnion: ...
        """
        points = tuple(points)
        if len(set(points)) != len(points):
            raise UnknownPoint(
                "Points were declared more than once",
                witness=tuple(sorted({
                    point for point in points if points.count(point) > 1})))
        known = frozenset(points)
        unique_opens = []
        for _open in opens:
            _open = frozenset(_open)
            unknown = _open - known
            if unknown:
                raise OpenMentionsUnknownPoint(
                    f"An open mentions unknown points: "
                    f"{', '.join(sorted(unknown))}",
                    witness=tuple(sorted(unknown)))
            if _open not in unique_opens:
                unique_opens.append(_open)
        open_set = frozenset(unique_opens)
        missing = [
            name
            for name, required in [('empty', frozenset()), ('full', known)]
            if required not in open_set
        ]
        if missing:
            raise MissingEmptyOrFull(
                f"The opens are missing the {' and the '.join(missing)} "
                f"set", witness=tuple(missing))
        order = {point: index for index, point in enumerate(points)}

        def sort_key(point_set):
            return sorted(map(order.get, point_set))

        for first, second in combinations(unique_opens, 2):
            if first | second not in open_set:
                raise NotClosedUnderUnion(
                    f"The union of {label_for_set(first, points)} and "
                    f"{label_for_set(second, points)} is not open",
                    witness=tuple(sorted((first, second), key=sort_key)))
            if first & second not in open_set:
                raise NotClosedUnderIntersection(
                    f"The intersection of {label_for_set(first, points)} and "
                    f"{label_for_set(second, points)} is not open",
                    witness=tuple(sorted((first, second), key=sort_key)))

        return cls(points=points, opens=tuple(unique_opens))

    @classmethod
    def from_preorder(cls, points: Sequence[Point],
                      preorder: Iterable[Tuple[Point, Point]],
                      ) -> 'FiniteSpace':
        """
        The opens are exactly the down-closed sets of the preorder, so the
        minimal open around `x` is everything below `x`.

        >>> space = FiniteSpace.from_preorder(['p', 'q'], [('p', 'q')])
        >>> [space.label(_open) for _open in space.opens]
        ['{}', '{p}', '{p,q}']
        >>> len(FiniteSpace.from_preorder(['p', 'q'], []).opens)
        4
        """
        points = tuple(points)
        known = set(points)
        graph = nx.DiGraph()
        graph.add_nodes_from(points)
        for lower, upper in preorder:
            for point in (lower, upper):
                if point not in known:
                    raise NotAPreorder(
                        f"The preorder mentions unknown point '{point}'",
                        witness=(point,))
            graph.add_edge(lower, upper)
        relation = frozenset(
            nx.transitive_closure(graph, reflexive=True).edges)
        opens = [
            frozenset(
                point
                for point, is_included in zip(points, included)
                if is_included
            )
            for included in product((False, True), repeat=len(points))
        ]
        down_sets = [
            candidate
            for candidate in opens
            if all(
                lower in candidate
                for lower, upper in relation
                if upper in candidate
            )
        ]
        order = {point: index for index, point in enumerate(points)}
        down_sets.sort(key=lambda _open: (
            len(_open), sorted(map(order.get, _open))))
        return cls.validate(points, down_sets)

    def label(self, point_set: Iterable[Point]) -> str:
        return label_for_set(point_set, self.points)

    def labels(self) -> List[str]:
        return [self.label(_open) for _open in self.opens]

    def open_for_label(self, label: str) -> PointSet:
        for _open in self.opens:
            if self.label(_open) == label:
                return _open
        raise NotAnOpen(f"'{label}' is not an open", witness=(label,))

    @property
    def full(self) -> PointSet:
        return frozenset(self.points)

    def check_points(self, point_set: Iterable[Point]) -> PointSet:
        point_set = frozenset(point_set)
        unknown = point_set - self.full
        if unknown:
            raise UnknownPoint(
                f"Unknown points: {', '.join(sorted(unknown))}",
                witness=tuple(sorted(unknown)))
        return point_set

    def check_open(self, point_set: Iterable[Point]) -> PointSet:
        point_set = self.check_points(point_set)
        if point_set not in self.open_set:
            raise NotAnOpen(
                f"{self.label(point_set)} is not an open",
                witness=(self.label(point_set),))
        return point_set

    def is_open(self, point_set: Iterable[Point]) -> bool:
        return self.check_points(point_set) in self.open_set

    def is_closed(self, point_set: Iterable[Point]) -> bool:
        """
        >>> sierpinski().is_closed({'q'}), sierpinski().is_closed({'p'})
        (True, False)
        """
        return self.full - self.check_points(point_set) in self.open_set

    def complement(self, point_set: Iterable[Point]) -> PointSet:
        return self.full - self.check_points(point_set)

    def closed_sets(self) -> List[PointSet]:
        return [self.full - _open for _open in self.opens]

    def interior(self, point_set: Iterable[Point]) -> PointSet:
        point_set = self.check_points(point_set)
        result = frozenset()
        for _open in self.opens:
            if _open <= point_set:
                result |= _open
        return result

    def closure(self, point_set: Iterable[Point]) -> PointSet:
        """
        The intersection of all closed supersets
        """
        point_set = self.check_points(point_set)
        result = self.full
        for closed in self.closed_sets():
            if point_set <= closed:
                result &= closed
        return result

    def boundary(self, point_set: Iterable[Point]) -> PointSet:
        return self.closure(point_set) - self.interior(point_set)

    def minimal_open_superset(self, point_set: Iterable[Point]) -> PointSet:
        """
        The intersection of all opens containing the set, which is open
        since there are finitely many

        >>> sorted(sierpinski().minimal_open_superset({'q'}))
        ['p', 'q']
        """
        point_set = self.check_points(point_set)
        result = self.full
        for _open in self.opens:
            if point_set <= _open:
                result &= _open
        return result

    def minimal_open(self, point: Point) -> PointSet:
        return self.minimal_open_superset({point})

    def neighbourhoods(self, point_set: Iterable[Point]) -> List[PointSet]:
        """All opens containing the set, in canonical order"""
        point_set = self.check_points(point_set)
        return [_open for _open in self.opens if point_set <= _open]

    def specialization_preorder(self) -> List[Tuple[Point, Point]]:
        """
        Pairs `(x, y)` with `x` in every open that contains `y`, matching the
        down-set convention of `from_preorder`

        >>> sierpinski().specialization_preorder()
        [('p', 'p'), ('p', 'q'), ('q', 'q')]
        """
        return [
            (lower, upper)
            for lower, upper in product(self.points, repeat=2)
            if lower in self.minimal_open(upper)
        ]

    def open_splittings(self, _open: PointSet
                        ) -> Iterable[Tuple[PointSet, PointSet]]:
        """Pairs of disjoint nonempty opens whose union is the given open"""
        for first in self.opens:
            if not first or not first < _open:
                continue
            second = _open - first
            if second in self.open_set:
                yield first, second

    def is_connected_open(self, _open: Iterable[Point]) -> bool:
        _open = self.check_open(_open)
        return next(iter(self.open_splittings(_open)), None) is None

    def components(self, _open: Iterable[Point]) -> List[PointSet]:
        """
        Split repeatedly along disjoint open pairs, until every part is
        connected. Disjoint open splittings of a finite space refine to a unique
        finest partition, so the order of splitting doesn't matter.

        >>> [sorted(part) for part in discrete(['p', 'q']).components(
        ...     {'p', 'q'})]
        [['p'], ['q']]
        >>> [sorted(part) for part in sierpinski().components({'p', 'q'})]
        [['p', 'q']]
        >>> discrete(['p', 'q']).components(set())
        []
        """
        _open = self.check_open(_open)
        if not _open:
            return []
        pending = [_open]
        parts = []
        while pending:
            part = pending.pop()
            splitting = next(iter(self.open_splittings(part)), None)
            if splitting is None:
                parts.append(part)
            else:
                pending.extend(splitting)
        order = {point: index for index, point in enumerate(self.points)}
        return sorted(parts, key=lambda part: min(map(order.get, part)))

    def opens_lattice(self) -> 'HeytingAlgebra':  # noqa: F821
        """
        >>> opens_lattice(sierpinski()).is_chain()
        True
        >>> len(opens_lattice(discrete(['p', 'q'])))
        4
        """
        from aristo.lattice import build_lattice
        labels = self.labels()
        return build_lattice(
            labels,
            [
                (self.label(lower), self.label(upper))
                for lower, upper in product(self.opens, repeat=2)
                if lower <= upper
            ],
            top=self.label(self.full),
            bottom=self.label(frozenset()),
        )

    def serialise(self) -> dict:
        order = {point: index for index, point in enumerate(self.points)}
        return {
            "points": list(self.points),
            "opens": [
                sorted(_open, key=order.get)
                for _open in self.opens
            ],
        }

    @classmethod
    def deserialise(cls, serialised: dict) -> 'FiniteSpace':
        """
        >>> space = FiniteSpace.deserialise(
        ...     {"points": ["p", "q"], "opens": [[], ["p"], ["p", "q"]]})
        >>> space == sierpinski()
        True
        """
        return cls.validate(
            [str(point) for point in serialised["points"]],
            [
                [str(point) for point in _open]
                for _open in serialised["opens"]
            ],
        )


def sierpinski() -> FiniteSpace:
    return FiniteSpace.validate(['p', 'q'], [[], ['p'], ['p', 'q']])


def discrete(points: Sequence[Point]) -> FiniteSpace:
    return FiniteSpace.from_preorder(points, [])


def coarse(points: Sequence[Point]) -> FiniteSpace:
    """
    >>> coarse(['a', 'b']).labels()
    ['{}', '{a,b}']
    """
    return FiniteSpace.validate(points, [[], list(points)])


def validate_space(points: Sequence[Point],
                   opens: Iterable[Iterable[Point]]) -> FiniteSpace:
    return FiniteSpace.validate(points, opens)


def alexandrov_from_preorder(points: Sequence[Point],
                             preorder: Iterable[Tuple[Point, Point]],
                             ) -> FiniteSpace:
    return FiniteSpace.from_preorder(points, preorder)


def interior(space: FiniteSpace, point_set: Iterable[Point]) -> PointSet:
    return space.interior(point_set)


def closure(space: FiniteSpace, point_set: Iterable[Point]) -> PointSet:
    return space.closure(point_set)


def boundary(space: FiniteSpace, point_set: Iterable[Point]) -> PointSet:
    """
    >>> sorted(boundary(sierpinski(), {'p'})), sorted(boundary(
    ...     sierpinski(), {'q'}))
    (['q'], ['q'])
    """
    return space.boundary(point_set)


def is_connected_open(space: FiniteSpace, _open: Iterable[Point]) -> bool:
    return space.is_connected_open(_open)


def components(space: FiniteSpace, _open: Iterable[Point]
               ) -> List[PointSet]:
    return space.components(_open)


def opens_lattice(space: FiniteSpace) -> 'HeytingAlgebra':  # noqa: F821
    return space.opens_lattice()

"""
Presheaves of finite sets on finite spaces.

Sections are opaque labels. Restrictions only need to be given along the
covering relation of the opens: every other restriction is generated by
composition, and all declared and generated restrictions must agree.
"""
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Tuple, Union

from aristo.errors import MissingSectionSet, MissingRestriction, \
    IdentityViolated, CompositionViolated, RestrictionConflict, \
    UnknownSection, NotAnOpen, InputParseError
from aristo.space import FiniteSpace, PointSet

__all__ = [
    'Presheaf', 'validate_presheaf', 'cover_pairs', 'inclusion_pairs',
]

Section = str
OpenKey = Union[int, str]
RestrictionMap = Dict[Section, Section]
RestrictionKey = Tuple[int, int]


def inclusion_pairs(space: FiniteSpace) -> List[RestrictionKey]:
    """
    Pairs of open indices `(larger, smaller)`, with the smaller inside the
    larger, including equal ones

    >>> from aristo.space import sierpinski
    >>> inclusion_pairs(sierpinski())
    [(0, 0), (1, 0), (1, 1), (2, 0), (2, 1), (2, 2)]
    """
    return [
        (larger, smaller)
        for larger, larger_open in enumerate(space.opens)
        for smaller, smaller_open in enumerate(space.opens)
        if smaller_open <= larger_open
    ]


def cover_pairs(space: FiniteSpace) -> List[RestrictionKey]:
    """
    The pairs of the covering relation: no open lies strictly between them

    >>> from aristo.space import sierpinski, discrete
    >>> cover_pairs(sierpinski())
    [(1, 0), (2, 1)]
    >>> cover_pairs(discrete(['p', 'q']))
    [(1, 0), (2, 0), (3, 1), (3, 2)]
    """
    return [
        (larger, smaller)
        for larger, smaller in inclusion_pairs(space)
        if larger != smaller
        and not any(
            space.opens[smaller] < middle < space.opens[larger]
            for middle in space.opens
        )
    ]


@dataclass(frozen=True)
class Presheaf:
    """
    Section sets for every open (by its index in `space.opens`), and a
    restriction map for every inclusion of opens

    >>> from aristo.space import sierpinski
    >>> presheaf = Presheaf.build(
    ...     sierpinski(),
    ...     {0: ['*'], 1: ['t'], 2: ['s1', 's2']},
    ...     {(2, 1): {'s1': 't', 's2': 't'}, (1, 0): {'t': '*'}})
    >>> presheaf.restrict(2, 0, 's2')
    '*'
    >>> presheaf.sections_at({'p'})
    ('t',)
    """
    space: FiniteSpace
    sections: Tuple[Tuple[Section, ...], ...]
    restrictions: Dict[RestrictionKey, RestrictionMap] = field(
        repr=False, compare=False)

    @classmethod
    def build(cls, space: FiniteSpace,
              sections: Mapping[OpenKey, Iterable[Section]],
              restrictions: Mapping[Union[RestrictionKey, str],
                                    Mapping[Section, Section]],
              ) -> 'Presheaf':
        """
        >>> from aristo.space import sierpinski
        >>> Presheaf.build(sierpinski(), {0: ['*'], 2: ['s']}, {})
        Traceback (most recent call last):
        ...
        aristo.errors.MissingSectionSet: ...
        >>> Presheaf.build(
        ...     sierpinski(), {0: ['*'], 1: ['t'], 2: ['s']},
        ...     {(2, 1): {'s': 't'}})
        Traceback (most recent call last):
        ...
        aristo.errors.MissingRestriction: ...
        """
        section_sets: Dict[int, Tuple[Section, ...]] = {}
        for key, values in sections.items():
            index = resolve_open(space, key)
            section_sets[index] = tuple(dict.fromkeys(map(str, values)))
        missing = [
            space.label(_open)
            for index, _open in enumerate(space.opens)
            if index not in section_sets
        ]
        if missing:
            raise MissingSectionSet(
                f"No sections were given for: {', '.join(missing)}",
                witness=tuple(missing))
        sections = tuple(
            section_sets[index] for index in range(len(space.opens)))

        declared: Dict[RestrictionKey, RestrictionMap] = {}
        for key, mapping in restrictions.items():
            larger, smaller = resolve_restriction_key(space, key)
            declared[(larger, smaller)] = check_restriction_map(
                space, sections, larger, smaller, mapping)

        return cls(space, sections, generate_restrictions(
            space, sections, declared))

    @classmethod
    def deserialise(cls, serialised: dict) -> 'Presheaf':
        if not isinstance(serialised, dict) \
                or not {'space', 'sections'} <= set(serialised):
            raise InputParseError(
                "A presheaf needs a 'space' and its 'sections'")
        return cls.build(
            FiniteSpace.deserialise(serialised['space']),
            serialised['sections'],
            serialised.get('restrictions', {}),
        )

    def serialise(self) -> dict:
        return {
            'space': self.space.serialise(),
            'sections': {
                str(index): list(sections)
                for index, sections in enumerate(self.sections)
            },
            'restrictions': {
                f"{larger}->{smaller}": dict(
                    self.restrictions[(larger, smaller)])
                for larger, smaller in cover_pairs(self.space)
            },
        }

    def open_index(self, key: Union[OpenKey, PointSet, Iterable[str]]
                   ) -> int:
        return resolve_open(self.space, key)

    def sections_at(self, key) -> Tuple[Section, ...]:
        return self.sections[self.open_index(key)]

    def restriction(self, larger, smaller) -> RestrictionMap:
        larger, smaller = self.open_index(larger), self.open_index(smaller)
        if (larger, smaller) not in self.restrictions:
            raise NotAnOpen(
                f"{self.space.label(self.space.opens[smaller])} is not inside "
                f"{self.space.label(self.space.opens[larger])}",
                witness=(self.space.label(self.space.opens[smaller]),
                         self.space.label(self.space.opens[larger])))
        return self.restrictions[(larger, smaller)]

    def restrict(self, larger, smaller, section: Section) -> Section:
        mapping = self.restriction(larger, smaller)
        if section not in mapping:
            label = self.space.label(self.space.opens[self.open_index(larger)])
            raise UnknownSection(
                f"'{section}' is not a section over {label}",
                witness=(section,))
        return mapping[section]


def resolve_open(space: FiniteSpace, key) -> int:
    """
    Find an open by its index, its label, or its points

    >>> from aristo.space import sierpinski
    >>> [resolve_open(sierpinski(), key) for key in (1, "2", "{p}", {'p'})]
    [1, 2, 1, 1]
    """
    if isinstance(key, int) and not isinstance(key, bool):
        if not 0 <= key < len(space.opens):
            raise NotAnOpen(f"There is no open #{key}", witness=(key,))
        return key
    if isinstance(key, str):
        if key.strip().isdigit():
            return resolve_open(space, int(key))
        return space.opens.index(space.open_for_label(key.strip()))
    point_set = space.check_open(key)
    return space.opens.index(point_set)


def resolve_restriction_key(space: FiniteSpace, key) -> RestrictionKey:
    if isinstance(key, str):
        parts = key.split('->')
        if len(parts) != 2:
            raise InputParseError(
                f"A restriction key should look like '2->1', not '{key}'",
                position=key)
        key = tuple(part.strip() for part in parts)
    larger, smaller = key
    larger, smaller = resolve_open(space, larger), resolve_open(space, smaller)
    if not space.opens[smaller] <= space.opens[larger]:
        raise RestrictionConflict(
            f"Can't restrict from {space.label(space.opens[larger])} to "
            f"{space.label(space.opens[smaller])}, which is not inside it",
            witness=(space.label(space.opens[larger]),
                     space.label(space.opens[smaller])))
    return larger, smaller


def check_restriction_map(space: FiniteSpace,
                          sections: Tuple[Tuple[Section, ...], ...],
                          larger: int, smaller: int,
                          mapping: Mapping[Section, Section],
                          ) -> RestrictionMap:
    larger_label = space.label(space.opens[larger])
    smaller_label = space.label(space.opens[smaller])
    mapping = {str(key): str(value) for key, value in mapping.items()}
    unknown_sources = sorted(set(mapping) - set(sections[larger]))
    if unknown_sources:
        raise UnknownSection(
            f"Restriction {larger_label}->{smaller_label} mentions unknown "
            f"sections: {', '.join(unknown_sources)}",
            witness=tuple(unknown_sources))
    unknown_targets = sorted(set(mapping.values()) - set(sections[smaller]))
    if unknown_targets:
        raise UnknownSection(
            f"Restriction {larger_label}->{smaller_label} maps to unknown "
            f"sections: {', '.join(unknown_targets)}",
            witness=tuple(unknown_targets))
    unmapped = [
        section for section in sections[larger] if section not in mapping]
    if unmapped:
        raise MissingRestriction(
            f"Restriction {larger_label}->{smaller_label} doesn't map: "
            f"{', '.join(unmapped)}",
            witness=(larger_label, smaller_label) + tuple(unmapped))
    if larger == smaller and any(
            key != value for key, value in mapping.items()):
        raise IdentityViolated(
            f"The restriction of {larger_label} to itself is not the "
            f"identity", witness=(larger_label,))
    return mapping


def _compose(first: RestrictionMap, second: RestrictionMap
             ) -> RestrictionMap:
    return {key: second[value] for key, value in first.items()}


def generate_restrictions(space: FiniteSpace,
                          sections: Tuple[Tuple[Section, ...], ...],
                          declared: Dict[RestrictionKey, RestrictionMap],
                          ) -> Dict[RestrictionKey, RestrictionMap]:
    """
    Fill in identities and composites, in order of increasing distance, and
    check that every route between two opens gives the same map
    """
    opens = space.opens
    restrictions: Dict[RestrictionKey, RestrictionMap] = {}
    pairs = sorted(
        inclusion_pairs(space),
        key=lambda pair: (
            len(opens[pair[0]]) - len(opens[pair[1]]), pair))
    for larger, smaller in pairs:
        if larger == smaller:
            restrictions[(larger, smaller)] = declared.get(
                (larger, smaller),
                {section: section for section in sections[larger]})
            continue
        routes = [
            (middle, _compose(
                restrictions[(larger, middle)],
                restrictions[(middle, smaller)]))
            for middle, middle_open in enumerate(opens)
            if opens[smaller] < middle_open < opens[larger]
        ]
        labels = (
            space.label(opens[smaller]), space.label(opens[larger]))
        if (larger, smaller) in declared:
            mapping = declared[(larger, smaller)]
            for middle, composite in routes:
                if composite != mapping:
                    raise CompositionViolated(
                        f"Restricting {labels[1]} to {labels[0]} directly "
                        f"differs from going through "
                        f"{space.label(opens[middle])}",
                        witness=(labels[0], space.label(opens[middle]),
                                 labels[1]))
        elif routes:
            (first_middle, mapping), *others = routes
            for middle, composite in others:
                if composite != mapping:
                    raise RestrictionConflict(
                        f"Restricting {labels[1]} to {labels[0]} through "
                        f"{space.label(opens[first_middle])} and through "
                        f"{space.label(opens[middle])} differ",
                        witness=(labels[0], space.label(opens[first_middle]),
                                 space.label(opens[middle]), labels[1]))
        else:
            raise MissingRestriction(
                f"No restriction from {labels[1]} to {labels[0]} was given",
                witness=(labels[1], labels[0]))
        restrictions[(larger, smaller)] = mapping
    return restrictions


def validate_presheaf(space: FiniteSpace,
                      sections: Mapping[OpenKey, Iterable[Section]],
                      restrictions: Mapping) -> Presheaf:
    return Presheaf.build(space, sections, restrictions)

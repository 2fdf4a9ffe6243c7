"""
The gluing condition: every compatible family on a cover has exactly one
amalgamation.
"""
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator, List, Optional, Tuple

from aristo.progress import ProgressReporter, silent_progress
from aristo.sheaf.presheaf import Presheaf, Section
from aristo.space import FiniteSpace

__all__ = [
    'irredundant_covers', 'compatible_families', 'amalgamations',
    'GluingFailure', 'SheafVerdict', 'check_sheaf',
]

Cover = Tuple[int, ...]
Family = Tuple[Section, ...]


def irredundant_covers(space: FiniteSpace, index: int) -> List[Cover]:
    """
    Families of opens whose union is the open, where no member is inside the
    union of the others. The empty open only has the empty cover.

    >>> from aristo.space import discrete, sierpinski
    >>> irredundant_covers(discrete(['p', 'q']), 3)
    [(3,), (1, 2)]
    >>> irredundant_covers(sierpinski(), 0)
    [()]
    """
    target = space.opens[index]
    candidates = [
        candidate
        for candidate, _open in enumerate(space.opens)
        if _open and _open <= target
    ]
    if not target:
        return [()]
    covers = []
    for size in range(1, len(target) + 1):
        for cover in combinations(candidates, size):
            members = [space.opens[member] for member in cover]
            if frozenset().union(*members) != target:
                continue
            if any(
                member <= frozenset().union(*(
                    other
                    for other_index, other in enumerate(members)
                    if other_index != member_index
                ))
                for member_index, member in enumerate(members)
            ):
                continue
            covers.append(cover)
    return covers


def compatible_families(presheaf: Presheaf, cover: Cover
                        ) -> Iterator[Family]:
    """
    Choices of a section on every member, that agree on the overlaps

    >>> from aristo.sheaf.constructors import constant_presheaf
    >>> from aristo.space import discrete
    >>> presheaf = constant_presheaf(discrete(['p', 'q']), ['0', '1'])
    >>> list(compatible_families(presheaf, (1, 2)))
    [('0', '0'), ('0', '1'), ('1', '0'), ('1', '1')]
    """
    space = presheaf.space
    overlaps = {
        (first, second): space.opens.index(
            space.opens[cover[first]] & space.opens[cover[second]])
        for first, second in combinations(range(len(cover)), 2)
    }
    for family in product(*(presheaf.sections[member] for member in cover)):
        if all(
            presheaf.restrict(cover[first], overlap, family[first])
            == presheaf.restrict(cover[second], overlap, family[second])
            for (first, second), overlap in overlaps.items()
        ):
            yield family


def amalgamations(presheaf: Presheaf, index: int, cover: Cover,
                  family: Family) -> List[Section]:
    return [
        section
        for section in presheaf.sections[index]
        if all(
            presheaf.restrict(index, member, section) == chosen
            for member, chosen in zip(cover, family)
        )
    ]


@dataclass(frozen=True)
class GluingFailure:
    """A compatible family on a cover, without exactly one amalgamation"""
    target: str
    cover: Tuple[str, ...]
    family: Tuple[Section, ...]
    amalgamations: Tuple[Section, ...]

    def serialise(self) -> dict:
        return {
            'open': self.target,
            'cover': list(self.cover),
            'family': list(self.family),
            'amalgamations': list(self.amalgamations),
        }

    def __str__(self) -> str:
        if not self.cover:
            return (
                f"the empty cover of {self.target} needs exactly one section, "
                f"but there are {len(self.amalgamations)}")
        family = ", ".join(
            f"{section} on {member}"
            for member, section in zip(self.cover, self.family)
        )
        return (
            f"{family} glue to {len(self.amalgamations)} sections on "
            f"{self.target}")


@dataclass(frozen=True)
class SheafVerdict:
    is_sheaf: bool
    failures: Tuple[GluingFailure, ...] = ()

    @property
    def witness(self) -> Optional[GluingFailure]:
        if not self.failures:
            return None
        return self.failures[0]

    def serialise(self) -> dict:
        return {
            'verdict': 'sheaf' if self.is_sheaf else 'not_sheaf',
            'witness': (
                None if self.witness is None else self.witness.serialise()),
            'failures': [failure.serialise() for failure in self.failures],
        }


def check_sheaf(presheaf: Presheaf,
                progress: Optional[ProgressReporter] = None) -> SheafVerdict:
    """
    Check every irredundant cover of every open; the empty open is checked
    last. At most one failure is reported per open.

    >>> from aristo.sheaf.constructors import constant_presheaf
    >>> from aristo.space import discrete
    >>> verdict = check_sheaf(constant_presheaf(discrete(['p', 'q']), '01'))
    >>> verdict.is_sheaf, str(verdict.witness)
    (False, '0 on {p}, 1 on {q} glue to 0 sections on {p,q}')
    """
    if progress is None:
        progress = silent_progress()
    space = presheaf.space
    indices = [
        index
        for index, _open in enumerate(space.opens)
        if _open
    ] + [space.opens.index(frozenset())]
    failures = []
    for index in progress.stepping(indices):
        label = space.label(space.opens[index])
        progress.report_if(f"Checking gluing on {label}")
        failure = _find_gluing_failure(presheaf, index)
        if failure is not None:
            failures.append(failure)
    return SheafVerdict(not failures, tuple(failures))


def _find_gluing_failure(presheaf: Presheaf, index: int
                         ) -> Optional[GluingFailure]:
    space = presheaf.space
    for cover in irredundant_covers(space, index):
        for family in compatible_families(presheaf, cover):
            glued = amalgamations(presheaf, index, cover, family)
            if len(glued) != 1:
                return GluingFailure(
                    target=space.label(space.opens[index]),
                    cover=tuple(
                        space.label(space.opens[member])
                        for member in cover
                    ),
                    family=family,
                    amalgamations=tuple(glued),
                )
    return None

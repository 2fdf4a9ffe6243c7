"""
Ready-made presheaves: constant ones, sheaves of functions, and the small
presheaf on the Sierpinski space.
"""
from itertools import product
from typing import Dict, Iterable, List

from aristo.sheaf.presheaf import Presheaf, cover_pairs
from aristo.space import FiniteSpace, PointSet, sierpinski

__all__ = [
    'constant_presheaf', 'functions_sheaf', 'function_label',
    'sierpinski_presheaf',
]

EMPTY_SECTION = '*'


def constant_presheaf(space: FiniteSpace, values: Iterable[str],
                      singleton_on_empty: bool = True) -> Presheaf:
    """
    The same values on every nonempty open, with restrictions that keep the
    value. The empty open gets a single section, unless
    `singleton_on_empty` is false, when it also gets all the values.

    >>> from aristo.space import discrete
    >>> constant_presheaf(discrete(['p', 'q']), '01').sections
    (('*',), ('0', '1'), ('0', '1'), ('0', '1'))
    """
    values = list(dict.fromkeys(map(str, values)))
    empty_sections = [EMPTY_SECTION] if singleton_on_empty else values
    sections = {
        index: values if _open else empty_sections
        for index, _open in enumerate(space.opens)
    }
    restrictions = {
        (larger, smaller): {
            value: (
                value
                if space.opens[smaller] or not singleton_on_empty
                else EMPTY_SECTION
            )
            for value in values
        }
        for larger, smaller in cover_pairs(space)
    }
    return Presheaf.build(space, sections, restrictions)


def function_label(assignment: Dict[str, str], order: Iterable[str]) -> str:
    """
    >>> function_label({'q': '1', 'p': '0'}, ['p', 'q'])
    'p=0,q=1'
    >>> function_label({}, ['p', 'q'])
    '{}'
    """
    parts = [
        f"{point}={assignment[point]}"
        for point in order
        if point in assignment
    ]
    return ",".join(parts) or '{}'


def _functions_on(_open: PointSet, space: FiniteSpace, values: List[str]
                  ) -> List[Dict[str, str]]:
    points = [point for point in space.points if point in _open]
    return [
        dict(zip(points, choice))
        for choice in product(values, repeat=len(points))
    ]


def functions_sheaf(space: FiniteSpace, values: Iterable[str]) -> Presheaf:
    """
    All functions from each open to the values, restricted by restricting
    their domain. This is always a sheaf.

    >>> functions_sheaf(sierpinski(), '01').sections_at({'p'})
    ('p=0', 'p=1')
    >>> len(functions_sheaf(sierpinski(), '01').sections_at({'p', 'q'}))
    4
    """
    values = list(dict.fromkeys(map(str, values)))
    functions = [
        _functions_on(_open, space, values)
        for _open in space.opens
    ]
    sections = {
        index: [
            function_label(function, space.points)
            for function in functions_on_open
        ]
        for index, functions_on_open in enumerate(functions)
    }
    restrictions = {
        (larger, smaller): {
            function_label(function, space.points): function_label(
                {
                    point: value
                    for point, value in function.items()
                    if point in space.opens[smaller]
                },
                space.points)
            for function in functions[larger]
        }
        for larger, smaller in cover_pairs(space)
    }
    return Presheaf.build(space, sections, restrictions)


def sierpinski_presheaf() -> Presheaf:
    """
    Two global sections, that agree on the open point

    >>> sierpinski_presheaf().restrict(2, 1, 's2')
    't'
    """
    return Presheaf.build(
        sierpinski(),
        {'{}': ['*'], '{p}': ['t'], '{p,q}': ['s1', 's2']},
        {'{p,q}->{p}': {'s1': 't', 's2': 't'}, '{p}->{}': {'t': '*'}},
    )

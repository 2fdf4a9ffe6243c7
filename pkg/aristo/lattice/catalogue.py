"""
A registry of named families of small Heyting algebras, used for exhaustive
checks and for the countermodel search.
"""
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Dict, Iterable, List, Tuple

from aristo.lattice.heyting_algebra import HeytingAlgebra, build_lattice

__all__ = [
    'AlgebraCatalogue', 'algebra_catalogue', 'chain', 'boolean_algebra',
    'diamond', 'pentagon', 'catalogued_algebras',
]

AlgebraFamily = Callable[[int], Iterable[Tuple[str, HeytingAlgebra]]]


@dataclass
class AlgebraCatalogue:
    """
    The algebra families, by name, in registration order.

    For every new family, use the `@algebra_catalogue.register('name')`
    decorator on a function that, given a maximum size, yields named algebras
    of at most that size.

    >>> test_catalogue = AlgebraCatalogue()
    >>> @test_catalogue.register('twos')
    ... def twos(max_size):
    ...     if max_size >= 2:
    ...         yield 'two', chain(2)
    >>> [name for name, _ in test_catalogue.algebras(5)]
    ['two']
    >>> @test_catalogue.register('twos')
    ... def twos_again(max_size):
    ...     yield from ()
    Traceback (most recent call last):
    ...
    ValueError: twos_again tried to override 'twos' that was registered by twos
    """
    families: Dict[str, AlgebraFamily] = field(default_factory=dict)

    def register(self, name: str, override: bool = False):
        def decorator(family: AlgebraFamily) -> AlgebraFamily:
            existing = self.families.get(name)
            if existing and not override:
                raise ValueError(
                    f"{family.__name__} tried to override '{name}' that was "
                    f"registered by {existing.__name__}")
            self.families[name] = family
            return family

        return decorator

    def algebras(self, max_size: int, family_names: Iterable[str] = None,
                 ) -> List[Tuple[str, HeytingAlgebra]]:
        if family_names is None:
            family_names = list(self.families)
        return [
            (name, algebra)
            for family_name in family_names
            for name, algebra in self.families[family_name](max_size)
            if len(algebra) <= max_size
        ]


algebra_catalogue = AlgebraCatalogue()


def chain(size: int) -> HeytingAlgebra:
    """
    The chain `0 < a < b < ... < 1` with `size` elements

    >>> chain(3).elements
    ('0', 'a', '1')
    >>> chain(1).elements
    ('0',)
    """
    if size < 1:
        raise ValueError(f"A chain needs at least one element, not {size}")
    if size == 1:
        return build_lattice(['0'], [])
    middle = [
        'abcdefghijklmnopqrstuvwxyz'[index]
        for index in range(size - 2)
    ]
    elements = ['0'] + middle + ['1']
    return build_lattice(elements, list(zip(elements, elements[1:])))


def boolean_algebra(atom_count: int) -> HeytingAlgebra:
    """
    The subsets of `atom_count` atoms, labelled by their atoms

    >>> boolean_algebra(2).elements
    ('0', 'x', 'y', '1')
    >>> boolean_algebra(2).is_boolean()
    True
    """
    atom_names = 'xyzw'[:atom_count]
    subsets = [
        frozenset(
            atom
            for atom, included in zip(atom_names, includes)
            if included
        )
        for includes in product((False, True), repeat=atom_count)
    ]
    subsets.sort(key=lambda subset: (len(subset), sorted(subset)))

    def name(subset):
        if not subset:
            return '0'
        if len(subset) == atom_count:
            return '1'
        return ''.join(sorted(subset, key=atom_names.index))

    return build_lattice(
        [name(subset) for subset in subsets],
        [
            (name(lower), name(upper))
            for lower, upper in product(subsets, repeat=2)
            if lower <= upper
        ],
    )


def diamond() -> HeytingAlgebra:
    """
    Two incomparable elements between bottom and top

    >>> diamond().implies('x', 'y'), diamond().pseudo_complement('x')
    ('y', 'y')
    """
    return build_lattice(
        ['0', 'x', 'y', '1'],
        [('0', 'x'), ('0', 'y'), ('x', '1'), ('y', '1')])


def pentagon_order() -> Tuple[List[str], List[Tuple[str, str]]]:
    """The pentagon is not distributive, so it's only available as data"""
    return (
        ['0', 'a', 'b', 'c', '1'],
        [('0', 'a'), ('a', 'b'), ('b', '1'), ('0', 'c'), ('c', '1')],
    )


def pentagon() -> HeytingAlgebra:
    """
    >>> pentagon()
    Traceback (most recent call last):
    ...
    aristo.errors.NotDistributive: ...
    """
    return build_lattice(*pentagon_order())


@algebra_catalogue.register('chains')
def catalogue_chains(max_size):
    for size in range(2, max_size + 1):
        yield f"chain-{size}", chain(size)


@algebra_catalogue.register('boolean')
def catalogue_boolean_algebras(max_size):
    atom_count = 1
    while 2 ** atom_count <= max_size:
        if atom_count > 1:
            yield f"boolean-{2 ** atom_count}", boolean_algebra(atom_count)
        atom_count += 1


@algebra_catalogue.register('diamond')
def catalogue_diamond(max_size):
    if max_size >= 4:
        yield "diamond", diamond()


@algebra_catalogue.register('opens')
def catalogue_opens_lattices(max_size):
    """
    The opens-lattices of all spaces with up to 4 points, up to homeomorphism
    """
    from aristo.space import all_spaces_up_to_homeomorphism
    for point_count in range(1, 5):
        for index, space in enumerate(
                all_spaces_up_to_homeomorphism(point_count)):
            if len(space.opens) > max_size:
                continue
            yield f"opens-{point_count}-{index}", space.opens_lattice()


def catalogued_algebras(max_size: int) -> List[Tuple[str, HeytingAlgebra]]:
    """
    >>> [name for name, _ in catalogued_algebras(4)][:8]
    ['chain-2', 'chain-3', 'chain-4', 'boolean-4', 'diamond', 'opens-1-0',
        'opens-2-0', 'opens-2-1']
    """
    return algebra_catalogue.algebras(max_size)

"""
Finite bounded distributive lattices, with their Heyting implication.

The main entry point is `build_lattice` (or `HeytingAlgebra.build`), which
accepts a Hasse diagram or any generating order relation.
"""
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from aristo.errors import NotAPartialOrder, NotALattice, NotDistributive, \
    UnknownElement, InvalidBound

__all__ = [
    'HeytingAlgebra', 'build_lattice', 'meet', 'join', 'implies',
    'pseudo_complement',
]

Element = str
OrderPair = Tuple[Element, Element]


@dataclass(frozen=True)
class HeytingAlgebra:
    """
    A finite Heyting algebra: a bounded distributive lattice, where all meets,
    joins and implications are precomputed at construction.

    Elements are opaque strings, and their canonical order is the input order.

    >>> chain = build_lattice(['0', 'a', '1'], [('0', 'a'), ('a', '1')])
    >>> chain.top, chain.bottom
    ('1', '0')
    >>> chain.meet('a', '1'), chain.join('a', '0'), chain.implies('1', 'a')
    ('a', 'a', 'a')
    """
    elements: Tuple[Element, ...]
    leq_pairs: frozenset
    top: Element
    bottom: Element
    meet_table: Dict[OrderPair, Element] = field(repr=False, compare=False)
    join_table: Dict[OrderPair, Element] = field(repr=False, compare=False)
    implies_table: Dict[OrderPair, Element] = field(
        repr=False, compare=False)

    @classmethod
    def build(cls, elements: Sequence[Element],
              order_pairs: Iterable[OrderPair],
              top: Optional[Element] = None,
              bottom: Optional[Element] = None) -> 'HeytingAlgebra':
        """
        Close the order reflexively and transitively, and validate that it's a
        distributive lattice.

        >>> HeytingAlgebra.build(['0', 'a', 'b'], [('0', 'a'), ('a', '0')])
        Traceback (most recent call last):
        ...
        aristo.errors.NotAPartialOrder: ...
        >>> HeytingAlgebra.build(['0', 'x', 'y'], [('0', 'x'), ('0', 'y')])
        Traceback (most recent call last):
        ...
        aristo.errors.NotALattice: ...
        """
        elements = tuple(elements)
        if len(set(elements)) != len(elements):
            duplicates = sorted({
                element
                for element in elements
                if elements.count(element) > 1
            })
            raise NotAPartialOrder(
                f"Elements were declared more than once: "
                f"{', '.join(duplicates)}", witness=tuple(duplicates))
        if not elements:
            raise NotALattice("A lattice needs at least one element")
        leq_pairs = cls.close_order(elements, order_pairs)
        cls.check_antisymmetric(elements, leq_pairs)
        top = cls.find_bound(elements, leq_pairs, top, is_top=True)
        bottom = cls.find_bound(elements, leq_pairs, bottom, is_top=False)
        meet_table, join_table = cls.make_meet_and_join_tables(
            elements, leq_pairs)
        cls.check_distributive(elements, meet_table, join_table)
        implies_table = cls.make_implies_table(
            elements, leq_pairs, meet_table)

        return cls(
            elements=elements,
            leq_pairs=leq_pairs,
            top=top,
            bottom=bottom,
            meet_table=meet_table,
            join_table=join_table,
            implies_table=implies_table,
        )

    @classmethod
    def close_order(cls, elements: Tuple[Element, ...],
                    order_pairs: Iterable[OrderPair]) -> frozenset:
        graph = nx.DiGraph()
        graph.add_nodes_from(elements)
        known = set(elements)
        for lower, upper in order_pairs:
            for element in (lower, upper):
                if element not in known:
                    raise UnknownElement(
                        f"The order mentions '{element}', which is not one of "
                        f"the elements", witness=(element,))
            graph.add_edge(lower, upper)
        closure = nx.transitive_closure(graph, reflexive=True)
        return frozenset(closure.edges)

    @classmethod
    def check_antisymmetric(cls, elements: Tuple[Element, ...],
                            leq_pairs: frozenset) -> None:
        for first, second in product(elements, repeat=2):
            if first == second:
                continue
            if (first, second) in leq_pairs and (second, first) in leq_pairs:
                raise NotAPartialOrder(
                    f"The order has a cycle through '{first}' and "
                    f"'{second}'", witness=(first, second))

    @classmethod
    def find_bound(cls, elements: Tuple[Element, ...], leq_pairs: frozenset,
                   declared: Optional[Element], is_top: bool) -> Element:
        name = 'top' if is_top else 'bottom'

        def is_bound(candidate):
            return all(
                ((other, candidate) if is_top else (candidate, other))
                in leq_pairs
                for other in elements
            )

        if declared is not None:
            if declared not in elements:
                raise UnknownElement(
                    f"The declared {name} '{declared}' is not an element",
                    witness=(declared,))
            if not is_bound(declared):
                raise InvalidBound(
                    f"The declared {name} '{declared}' is not comparable "
                    f"with every element as a {name} should",
                    witness=(declared,))
            return declared
        bounds = [element for element in elements if is_bound(element)]
        if not bounds:
            raise NotALattice(
                f"There is no {name} element", witness=(name,))
        bound, = bounds
        return bound

    @classmethod
    def make_meet_and_join_tables(
            cls, elements: Tuple[Element, ...], leq_pairs: frozenset,
    ) -> Tuple[Dict[OrderPair, Element], Dict[OrderPair, Element]]:
        meet_table = {}
        join_table = {}
        for first, second in product(elements, repeat=2):
            lowers = [
                element
                for element in elements
                if (element, first) in leq_pairs
                and (element, second) in leq_pairs
            ]
            greatest = [
                lower
                for lower in lowers
                if all((other, lower) in leq_pairs for other in lowers)
            ]
            if not greatest:
                raise NotALattice(
                    f"'{first}' and '{second}' have no meet",
                    witness=(first, second))
            uppers = [
                element
                for element in elements
                if (first, element) in leq_pairs
                and (second, element) in leq_pairs
            ]
            least = [
                upper
                for upper in uppers
                if all((upper, other) in leq_pairs for other in uppers)
            ]
            if not least:
                raise NotALattice(
                    f"'{first}' and '{second}' have no join",
                    witness=(first, second))
            meet_table[(first, second)], = greatest
            join_table[(first, second)], = least

        return meet_table, join_table

    @classmethod
    def check_distributive(cls, elements: Tuple[Element, ...],
                           meet_table: Dict[OrderPair, Element],
                           join_table: Dict[OrderPair, Element]) -> None:
        for x, y, z in product(elements, repeat=3):
            left = meet_table[(x, join_table[(y, z)])]
            right = join_table[(meet_table[(x, y)], meet_table[(x, z)])]
            if left != right:
                raise NotDistributive(
                    f"Distributivity fails for ({x}, {y}, {z}): "
                    f"{x} & ({y} | {z}) = {left}, but "
                    f"({x} & {y}) | ({x} & {z}) = {right}",
                    witness=(x, y, z))

    @classmethod
    def make_implies_table(cls, elements: Tuple[Element, ...],
                           leq_pairs: frozenset,
                           meet_table: Dict[OrderPair, Element],
                           ) -> Dict[OrderPair, Element]:
        """
        Brute force: the largest `w` with `w & u <= v`, which exists since the
        lattice is finite and distributive
        """
        implies_table = {}
        for u, v in product(elements, repeat=2):
            candidates = [
                w
                for w in elements
                if (meet_table[(w, u)], v) in leq_pairs
            ]
            largest, = [
                candidate
                for candidate in candidates
                if all((other, candidate) in leq_pairs
                       for other in candidates)
            ]
            implies_table[(u, v)] = largest
        return implies_table

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, element) -> bool:
        return element in self.elements

    def check_element(self, *elements: Element) -> None:
        for element in elements:
            if element not in self.elements:
                raise UnknownElement(
                    f"'{element}' is not an element of the algebra",
                    witness=(element,))

    def leq(self, u: Element, v: Element) -> bool:
        """
        >>> diamond = build_lattice(
        ...     ['0', 'x', 'y', '1'],
        ...     [('0', 'x'), ('0', 'y'), ('x', '1'), ('y', '1')])
        >>> diamond.leq('0', '1'), diamond.leq('x', 'y')
        (True, False)
        """
        self.check_element(u, v)
        return (u, v) in self.leq_pairs

    def meet(self, u: Element, v: Element) -> Element:
        self.check_element(u, v)
        return self.meet_table[(u, v)]

    def join(self, u: Element, v: Element) -> Element:
        self.check_element(u, v)
        return self.join_table[(u, v)]

    def implies(self, u: Element, v: Element) -> Element:
        self.check_element(u, v)
        return self.implies_table[(u, v)]

    def pseudo_complement(self, u: Element) -> Element:
        return self.implies(u, self.bottom)

    def meet_all(self, items: Iterable[Element]) -> Element:
        result = self.top
        for item in items:
            result = self.meet(result, item)
        return result

    def join_all(self, items: Iterable[Element]) -> Element:
        """
        >>> chain = build_lattice(['0', 'a', '1'], [('0', 'a'), ('a', '1')])
        >>> chain.join_all([]), chain.join_all(['0', 'a'])
        ('0', 'a')
        """
        result = self.bottom
        for item in items:
            result = self.join(result, item)
        return result

    def elements_below(self, u: Element) -> List[Element]:
        self.check_element(u)
        return [
            element
            for element in self.elements
            if (element, u) in self.leq_pairs
        ]

    def nonzero_elements(self) -> List[Element]:
        return [
            element
            for element in self.elements
            if element != self.bottom
        ]

    def atoms(self) -> List[Element]:
        """
        The minimal nonzero elements

        >>> diamond = build_lattice(
        ...     ['0', 'x', 'y', '1'],
        ...     [('0', 'x'), ('0', 'y'), ('x', '1'), ('y', '1')])
        >>> diamond.atoms()
        ['x', 'y']
        """
        nonzero = self.nonzero_elements()
        return [
            element
            for element in nonzero
            if not any(
                other != element and (other, element) in self.leq_pairs
                for other in nonzero
            )
        ]

    def is_chain(self) -> bool:
        return all(
            (u, v) in self.leq_pairs or (v, u) in self.leq_pairs
            for u, v in product(self.elements, repeat=2)
        )

    def is_boolean(self) -> bool:
        """
        Whether double negation is the identity, ie whether excluded middle
        holds

        >>> build_lattice(['0', 'a', '1'], [('0', 'a'), ('a', '1')])\\
        ...     .is_boolean()
        False
        >>> build_lattice(['0', '1'], [('0', '1')]).is_boolean()
        True
        """
        return all(
            self.pseudo_complement(self.pseudo_complement(element))
            == element
            for element in self.elements
        )

    def hasse_pairs(self) -> List[OrderPair]:
        """The cover relation, in canonical order"""
        return [
            (lower, upper)
            for lower, upper in product(self.elements, repeat=2)
            if lower != upper
            and (lower, upper) in self.leq_pairs
            and not any(
                middle not in (lower, upper)
                and (lower, middle) in self.leq_pairs
                and (middle, upper) in self.leq_pairs
                for middle in self.elements
            )
        ]

    def serialise(self) -> dict:
        return {
            "elements": list(self.elements),
            "order": [list(pair) for pair in self.hasse_pairs()],
            "top": self.top,
            "bottom": self.bottom,
        }

    @classmethod
    def deserialise(cls, serialised: dict) -> 'HeytingAlgebra':
        """
        >>> algebra = HeytingAlgebra.deserialise({
        ...     "elements": ["0", "a", "1"], "order": [["0", "a"], ["a", "1"]],
        ... })
        >>> HeytingAlgebra.deserialise(algebra.serialise()) == algebra
        True
        >>> algebra.serialise()
        {'elements': ['0', 'a', '1'], 'order': [['0', 'a'], ['a', '1']],
            'top': '1', 'bottom': '0'}
        """
        return cls.build(
            [str(element) for element in serialised["elements"]],
            [
                (str(lower), str(upper))
                for lower, upper in serialised.get("order", [])
            ],
            top=serialised.get("top"),
            bottom=serialised.get("bottom"),
        )


def build_lattice(elements: Sequence[Element],
                  order_pairs: Iterable[OrderPair],
                  top: Optional[Element] = None,
                  bottom: Optional[Element] = None) -> HeytingAlgebra:
    """
    >>> build_lattice(['0', 'x', 'y', '1'],
    ...     [('0', 'x'), ('0', 'y'), ('x', '1'), ('y', '1')]).meet('x', 'y')
    '0'
    """
    return HeytingAlgebra.build(elements, order_pairs, top=top, bottom=bottom)


def meet(algebra: HeytingAlgebra, u: Element, v: Element) -> Element:
    return algebra.meet(u, v)


def join(algebra: HeytingAlgebra, u: Element, v: Element) -> Element:
    return algebra.join(u, v)


def implies(algebra: HeytingAlgebra, u: Element, v: Element) -> Element:
    """
    >>> chain = build_lattice(['0', 'a', '1'], [('0', 'a'), ('a', '1')])
    >>> implies(chain, 'a', '0'), implies(chain, '0', 'a')
    ('0', '1')
    """
    return algebra.implies(u, v)


def pseudo_complement(algebra: HeytingAlgebra, u: Element) -> Element:
    return algebra.pseudo_complement(u)

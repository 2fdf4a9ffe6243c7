"""
The connectivity and divisibility axioms over finite Heyting algebras.

Each check can evaluate the formula as written, or the corrected reading. The
formulas as written admit degenerate instantiations (eg `u = 1, v = 0`), and
these are reported, not hidden.
"""
from itertools import product
from typing import Iterator, List, Optional, Tuple, Union

from aristo.axioms.axiom_report import Axiom, AxiomMode, AxiomReport
from aristo.lattice import HeytingAlgebra
from aristo.progress import ProgressReporter, silent_progress

__all__ = [
    'disjoint_splittings', 'is_connected_element', 'is_dense_in',
    'dense_splitting', 'check_global_connectivity',
    'check_local_connectivity', 'check_divisibility', 'check_all',
]

Element = str
ModeLike = Union[AxiomMode, str]


def _parse_mode(mode: ModeLike) -> AxiomMode:
    if isinstance(mode, AxiomMode):
        return mode
    return AxiomMode.parse(mode)


def disjoint_splittings(algebra: HeytingAlgebra, z: Element,
                        ) -> Iterator[Tuple[Element, Element]]:
    """
    All pairs of nonzero, disjoint elements that join to `z`

    >>> from aristo.lattice import boolean_algebra
    >>> list(disjoint_splittings(boolean_algebra(2), '1'))
    [('x', 'y'), ('y', 'x')]
    """
    bottom = algebra.bottom
    below = [
        element
        for element in algebra.elements_below(z)
        if element != bottom
    ]
    for u, v in product(below, repeat=2):
        if algebra.meet(u, v) == bottom and algebra.join(u, v) == z:
            yield u, v


def is_connected_element(algebra: HeytingAlgebra, z: Element) -> bool:
    """
    Whether `z` can't be split into two nonzero disjoint parts

    >>> from aristo.lattice import boolean_algebra, chain
    >>> is_connected_element(chain(3), '1')
    True
    >>> is_connected_element(boolean_algebra(2), '1'), \\
    ...     is_connected_element(boolean_algebra(2), 'x')
    (False, True)
    """
    algebra.check_element(z)
    return next(disjoint_splittings(algebra, z), None) is None


def is_dense_in(algebra: HeytingAlgebra, d: Element, u: Element) -> bool:
    """
    Whether every nonzero part of `u` meets `d`

    This is the same as `u & ~d = 0`.

    >>> from aristo.lattice import boolean_algebra, chain
    >>> is_dense_in(chain(3), 'a', '1'), \\
    ...     is_dense_in(boolean_algebra(2), 'x', '1')
    (True, False)
    """
    algebra.check_element(d, u)
    return all(
        algebra.meet(z, d) != algebra.bottom
        for z in algebra.elements_below(u)
        if z != algebra.bottom
    )


def dense_splitting(algebra: HeytingAlgebra, u: Element
                    ) -> Optional[Tuple[Element, Element]]:
    """
    Two nonzero disjoint parts of `u`, whose join is dense in `u`, if any

    >>> from aristo.lattice import boolean_algebra
    >>> dense_splitting(boolean_algebra(2), '1')
    ('x', 'y')
    >>> dense_splitting(boolean_algebra(2), 'x') is None
    True
    """
    bottom = algebra.bottom
    below = [
        element
        for element in algebra.elements_below(u)
        if element != bottom
    ]
    for w, v in product(below, repeat=2):
        if algebra.meet(w, v) != bottom:
            continue
        if is_dense_in(algebra, algebra.join(w, v), u):
            return w, v
    return None


def check_global_connectivity(algebra: HeytingAlgebra,
                              mode: ModeLike = AxiomMode.Corrected,
                              ) -> AxiomReport:
    """
    There are no two disjoint elements joining to the top; as written the
    pair `1, 0` always refutes it

    >>> from aristo.lattice import boolean_algebra, chain
    >>> check_global_connectivity(chain(2)).holds
    True
    >>> check_global_connectivity(boolean_algebra(2)).witness
    ('x', 'y')
    >>> check_global_connectivity(chain(2), 'as-written').witness
    ('1', '0')
    """
    mode = _parse_mode(mode)
    if mode == AxiomMode.AsWritten:
        top, bottom = algebra.top, algebra.bottom
        candidates = [(top, bottom)] + list(
            product(algebra.elements, repeat=2))
        for u, v in candidates:
            if algebra.join(u, v) == top and algebra.meet(u, v) == bottom:
                note = (
                    "degenerate instantiation u = 1, v = 0"
                    if (u, v) == (top, bottom) else None
                )
                return AxiomReport(
                    Axiom.GlobalConnectivity, mode, False, (u, v), note)
        return AxiomReport(Axiom.GlobalConnectivity, mode, True)

    splitting = next(disjoint_splittings(algebra, algebra.top), None)
    if splitting is not None:
        return AxiomReport(
            Axiom.GlobalConnectivity, mode, False, splitting)
    return AxiomReport(Axiom.GlobalConnectivity, mode, True)


def _connected_elements(algebra: HeytingAlgebra) -> List[Element]:
    return [
        element
        for element in algebra.elements
        if is_connected_element(algebra, element)
    ]


def check_local_connectivity(algebra: HeytingAlgebra,
                             mode: ModeLike = AxiomMode.Corrected,
                             ) -> AxiomReport:
    """
    As written, the top is the join of the connected elements; corrected,
    every element is the join of the connected elements below it

    >>> from aristo.lattice import boolean_algebra, chain
    >>> check_local_connectivity(chain(2)).holds
    True
    >>> check_local_connectivity(boolean_algebra(2)).holds
    True
    """
    mode = _parse_mode(mode)
    connected = _connected_elements(algebra)
    if mode == AxiomMode.AsWritten:
        targets = [algebra.top]
    else:
        targets = list(algebra.elements)
    for target in targets:
        covering = algebra.join_all(
            element
            for element in connected
            if algebra.leq(element, target)
        )
        if covering != target:
            return AxiomReport(
                Axiom.LocalConnectivity, mode, False, (target, covering))
    return AxiomReport(
        Axiom.LocalConnectivity, mode, True, tuple(connected))


def check_divisibility(algebra: HeytingAlgebra,
                       mode: ModeLike = AxiomMode.Corrected,
                       progress: Optional[ProgressReporter] = None,
                       ) -> AxiomReport:
    """
    As written, every `u` has disjoint `w, v` such that every `z` above
    `w | v` is `u`, which fails for any `u` other than the top. Corrected,
    every nonzero `u` has two nonzero disjoint parts whose join is dense in
    `u`, which fails at any atom.

    >>> from aristo.lattice import boolean_algebra, chain
    >>> check_divisibility(chain(2)).witness
    ('1',)
    >>> check_divisibility(boolean_algebra(2)).witness
    ('x',)
    >>> check_divisibility(chain(3), 'as-written').witness
    ('0',)
    >>> check_divisibility(chain(1), 'as-written').holds
    True
    """
    mode = _parse_mode(mode)
    if progress is None:
        progress = silent_progress()
    if mode == AxiomMode.AsWritten:
        for u in progress.stepping(algebra.elements):
            progress.report_if(f"Checking divisibility at {u}")
            found = any(
                algebra.meet(w, v) == algebra.bottom
                and all(
                    z == u
                    for z in algebra.elements
                    if algebra.leq(algebra.join(w, v), z)
                )
                for w, v in product(algebra.elements, repeat=2)
            )
            if not found:
                return AxiomReport(Axiom.Divisibility, mode, False, (u,))
        return AxiomReport(
            Axiom.Divisibility, mode, True, (algebra.top,),
            "holds only because the algebra has a single element")

    splits = []
    for u in progress.stepping(algebra.nonzero_elements()):
        progress.report_if(f"Checking divisibility at {u}")
        splitting = dense_splitting(algebra, u)
        if splitting is None:
            return AxiomReport(Axiom.Divisibility, mode, False, (u,))
        splits.append((u,) + splitting)
    note = None if splits else "holds vacuously, with no nonzero elements"
    return AxiomReport(Axiom.Divisibility, mode, True, tuple(splits), note)


def check_all(algebra: HeytingAlgebra, mode: ModeLike = AxiomMode.Corrected,
              progress: Optional[ProgressReporter] = None,
              ) -> List[AxiomReport]:
    """
    >>> from aristo.lattice import chain
    >>> [report.verdict for report in check_all(chain(2))]
    ['holds', 'holds', 'fails']
    """
    return [
        check_global_connectivity(algebra, mode),
        check_local_connectivity(algebra, mode),
        check_divisibility(algebra, mode, progress),
    ]

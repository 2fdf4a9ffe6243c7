"""
Heyting-valued semantics: evaluate formulas in a finite Heyting algebra, or in
the frame of open regions of the line.
"""
from dataclasses import dataclass
from itertools import product
from typing import Any, Dict, Mapping, Optional, Union

from aristo.errors import UnassignedAtom, TooManyAtoms
from aristo.lattice import HeytingAlgebra, algebra_catalogue, chain
from aristo.line import (
    OpenRegion, region_meet, region_join, region_implies, region_leq,
)
from aristo.logic.formula import (
    Formula, Atom, Top, Bottom, And, Or, Implies, atoms,
)
from aristo.logic.parser import parse_formula
from aristo.progress import ProgressReporter, silent_progress

__all__ = [
    'LineFrame', 'Valuation', 'evaluate', 'ValidityResult', 'is_valid',
    'Countermodel', 'find_countermodel', 'DEFAULT_VALUATION_BUDGET',
]

DEFAULT_VALUATION_BUDGET = 200000


class LineFrame:
    """
    The open regions of the line, with the same interface as a finite algebra

    >>> frame = LineFrame()
    >>> str(frame.implies(OpenRegion.parse("(0, 1)"), frame.bottom))
    '(-inf, 0) u (1, +inf)'
    """
    top = OpenRegion.full()
    bottom = OpenRegion.empty()

    def check_element(self, *elements):
        for element in elements:
            if not isinstance(element, OpenRegion):
                raise TypeError(f"Expected an open region, not {element!r}")

    def meet(self, u: OpenRegion, v: OpenRegion) -> OpenRegion:
        return region_meet(u, v)

    def join(self, u: OpenRegion, v: OpenRegion) -> OpenRegion:
        return region_join(u, v)

    def implies(self, u: OpenRegion, v: OpenRegion) -> OpenRegion:
        return region_implies(u, v)

    def pseudo_complement(self, u: OpenRegion) -> OpenRegion:
        return region_implies(u, self.bottom)

    def leq(self, u: OpenRegion, v: OpenRegion) -> bool:
        return region_leq(u, v)


Frame = Union[HeytingAlgebra, LineFrame]


@dataclass(frozen=True)
class Valuation:
    target: Frame
    assignment: Mapping[str, Any]


def evaluate(formula: Union[Formula, str], target: Frame,
             assignment: Mapping[str, Any]) -> Any:
    """
    >>> from aristo.space import sierpinski
    >>> opens = sierpinski().opens_lattice()
    >>> evaluate("p | ~p", opens, {'p': '{p}'})
    '{p}'
    >>> str(evaluate("black & white", LineFrame(), {
    ...     'black': OpenRegion.parse("(0, 1)"),
    ...     'white': OpenRegion.parse("(1, 2)")}))
    '{}'
    >>> evaluate("p -> q", opens, {'p': '{p}'})
    Traceback (most recent call last):
    ...
    aristo.errors.UnassignedAtom: ...
    """
    if isinstance(formula, str):
        formula = parse_formula(formula)
    missing = [name for name in atoms(formula) if name not in assignment]
    if missing:
        raise UnassignedAtom(
            f"No value was assigned to: {', '.join(missing)}",
            witness=tuple(missing))
    target.check_element(*(assignment[name] for name in atoms(formula)))
    return _evaluate(formula, target, assignment)


def _evaluate(formula: Formula, target: Frame,
              assignment: Mapping[str, Any]) -> Any:
    if isinstance(formula, Atom):
        return assignment[formula.name]
    if isinstance(formula, Top):
        return target.top
    if isinstance(formula, Bottom):
        return target.bottom
    left = _evaluate(formula.left, target, assignment)
    right = _evaluate(formula.right, target, assignment)
    if isinstance(formula, And):
        return target.meet(left, right)
    if isinstance(formula, Or):
        return target.join(left, right)
    if isinstance(formula, Implies):
        return target.implies(left, right)
    raise TypeError(f"Unknown formula {formula!r}")


@dataclass(frozen=True)
class ValidityResult:
    valid: bool
    checked: int
    counter_valuation: Optional[Dict[str, str]] = None
    value: Optional[str] = None

    def serialise(self) -> dict:
        return {
            'valid': self.valid,
            'checked': self.checked,
            'counter_valuation': self.counter_valuation,
            'value': self.value,
        }


def is_valid(formula: Union[Formula, str], algebra: HeytingAlgebra,
             budget: int = DEFAULT_VALUATION_BUDGET,
             progress: Optional[ProgressReporter] = None) -> ValidityResult:
    """
    Try every assignment of elements to atoms

    >>> three = chain(3)
    >>> is_valid("~(p & ~p)", three).valid
    True
    >>> result = is_valid("((p -> q) -> p) -> p", three)
    >>> result.counter_valuation, result.value
    ({'p': 'a', 'q': '0'}, 'a')
    >>> is_valid("p & q & r", three, budget=20)
    Traceback (most recent call last):
    ...
    aristo.errors.TooManyAtoms: ...
    """
    if isinstance(formula, str):
        formula = parse_formula(formula)
    if progress is None:
        progress = silent_progress()
    names = atoms(formula)
    valuation_count = len(algebra) ** len(names)
    if valuation_count > budget:
        raise TooManyAtoms(
            f"{len(algebra)} elements and {len(names)} atoms give "
            f"{valuation_count} valuations, over the budget of {budget}",
            witness=(len(algebra), len(names), budget))
    checked = 0
    for values in product(algebra.elements, repeat=len(names)):
        checked += 1
        progress.step().report_if(
            f"Checked {checked}/{valuation_count} valuations")
        assignment = dict(zip(names, values))
        value = _evaluate(formula, algebra, assignment)
        if value != algebra.top:
            return ValidityResult(False, checked, assignment, value)
    return ValidityResult(True, checked)


@dataclass(frozen=True)
class Countermodel:
    name: str
    algebra: HeytingAlgebra
    assignment: Dict[str, str]
    value: str

    def serialise(self) -> dict:
        return {
            'algebra_name': self.name,
            'algebra': self.algebra.serialise(),
            'assignment': self.assignment,
            'value': self.value,
        }


def _candidate_algebras(max_size: int):
    for size in range(2, max_size + 1):
        yield f"chain-{size}", chain(size)
    for name, algebra in algebra_catalogue.algebras(max_size):
        if not algebra.is_chain():
            yield name, algebra


def find_countermodel(formula: Union[Formula, str], max_size: int = 5,
                      budget: int = DEFAULT_VALUATION_BUDGET,
                      progress: Optional[ProgressReporter] = None,
                      ) -> Optional[Countermodel]:
    """
    The smallest chain that refutes the formula, or else the first other
    catalogued algebra that does

    >>> countermodel = find_countermodel("~~p -> p")
    >>> countermodel.name, countermodel.assignment
    ('chain-3', {'p': 'a'})
    >>> find_countermodel("p -> p") is None
    True
    """
    if isinstance(formula, str):
        formula = parse_formula(formula)
    if progress is None:
        progress = silent_progress()
    for name, algebra in _candidate_algebras(max_size):
        progress.report_if(f"Searching {name}")
        result = is_valid(
            formula, algebra, budget, progress.sub_reporter(name))
        if not result.valid:
            return Countermodel(
                name, algebra, result.counter_valuation, result.value)
    return None

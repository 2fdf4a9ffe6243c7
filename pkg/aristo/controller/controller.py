"""
All the operations that are provided on the command line can be done via using
`Controller`.

Every command method returns a `Report`, after showing it in the chosen
format. Errors raised while reading or using the inputs become reports of
malformed input.
"""
import functools
import shutil
from dataclasses import dataclass, replace
from typing import Callable, Dict, Iterable, List, Optional

import click

from aristo.axioms import AxiomMode, check_all, check_divisibility_line, \
    check_point_divisibility_line
from aristo.controller.inputs import load_lattice, load_space, \
    load_point_map, load_region, load_regions, load_piecewise, \
    load_presheaf, split_points, parse_assignments
from aristo.errors import AristoError, InputParseError, LatticeError, \
    SpaceError
from aristo.lattice import HeytingAlgebra
from aristo.line import OpenRegion, region_meet, region_join, region_not, \
    region_implies, region_boundary, divide, is_compact_complement, \
    germ_at, strata, catastrophe_set, ivt_witness, image_of_interval, \
    halving_chain, random_regions, Polynomial, format_rational, \
    parse_rational
from aristo.logic import parse_formula, to_text, describe, atoms, evaluate, \
    is_valid, find_countermodel, LineFrame
from aristo.nilpotent import TruncatedPoly, lift_and_eval, derivative, \
    higher_derivatives, leibniz_check
from aristo.progress import ProgressReporter
from aristo.report import Report, Verdict, OutputFormat, emit
from aristo.settings import Settings, settings_proxy
from aristo.sheaf import check_sheaf, stalk_at_point, topos_of, \
    invariant_hull, invariant_opens
from aristo.space import FiniteSpace, PointMap
from aristo.styling.shortcuts import e_warn, e_value, e_holds
from aristo.utils import join_rows

__all__ = ['Controller', 'reporting', 'value_report', 'verdict_report']


def value_report(value, **kwargs) -> Report:
    return Report('', Verdict.Value, value=value, **kwargs)


def verdict_report(holds: bool, **kwargs) -> Report:
    return Report('', Verdict.from_holds(holds), **kwargs)


def failure_report(error: AristoError) -> Report:
    return Report(
        '', Verdict.Fails, witness=error.witness,
        details={'error': type(error).__name__}, note=error.message)


def reporting(command: str):
    """
    Name the report of a command method, turn errors into malformed-input
    reports, and show it
    """
    def decorator(method: Callable[..., Report]) -> Callable[..., Report]:
        @functools.wraps(method)
        def wrapper(self: 'Controller', *args, **kwargs) -> Report:
            try:
                report = replace(method(self, *args, **kwargs), command=command)
            except AristoError as e:
                report = Report.from_error(command, e)
            self.emit(report)
            return report

        return wrapper

    return decorator


def implication_table(algebra: HeytingAlgebra) -> List[str]:
    """
    >>> from aristo.lattice import chain
    >>> print("\\n".join(implication_table(chain(3))))
    | -> | 0 | a | 1 |
    | 0  | 1 | 1 | 1 |
    | a  | 0 | 1 | 1 |
    | 1  | 0 | a | 1 |
    """
    rows = [('->',) + tuple(algebra.elements)] + [
        (u,) + tuple(algebra.implies(u, v) for v in algebra.elements)
        for u in algebra.elements
    ]
    return join_rows(rows).splitlines()


def _regions_text(regions: Iterable[OpenRegion]) -> List[str]:
    return list(map(str, regions))


ARITHMETIC_OPERATIONS: Dict[str, Callable] = {
    'add': lambda x, y: x + y,
    'sub': lambda x, y: x - y,
    'mul': lambda x, y: x * y,
}


@dataclass
class Controller:
    output_format: OutputFormat = OutputFormat.Text
    seed: Optional[int] = None
    debug: bool = False

    @property
    def settings(self) -> Settings:
        settings_proxy.ensure_default()
        return settings_proxy()

    def emit(self, report: Report) -> None:
        emit(report, self.output_format)

    def make_progress(self) -> ProgressReporter:
        return ProgressReporter(
            enabled=self.debug,
            min_report_interval_seconds=(
                self.settings.progress_interval_seconds),
        )

    def get_seed(self) -> int:
        if self.seed is not None:
            return self.seed
        return self.settings.default_seed

    def init_settings(self, settings_directory=None):
        """Create a new settings directory for the user, if they're missing"""
        if settings_proxy.has() and settings_proxy().path \
                and settings_proxy().path.exists():
            click.echo(
                f"User settings {e_warn('already exist')} at "
                f"{e_value(str(settings_proxy().path))}. Will not overwrite "
                f"them.")
            return False

        self.create_settings(settings_directory=settings_directory)

        return True

    def create_settings(self, settings_directory=None):
        """Create a new settings directory for the user"""
        if settings_directory is None:
            settings_directory = Settings.DEFAULT_SETTINGS_DIRECTORY
        shutil.copytree(
            Settings.EXAMPLE_SETTINGS_DIRECTORY, str(settings_directory),
            dirs_exist_ok=True)
        settings = Settings.from_settings_directory(settings_directory)
        settings_proxy.set(settings)
        click.echo(
            f"Initialised {e_holds('user settings')} at "
            f"{e_value(str(settings_proxy().settings_directory))}! You can "
            f"now edit {e_value(str(settings_proxy().path))}")

    # Lattices

    @reporting("lattice check")
    def lattice_check(self, source: str) -> Report:
        try:
            algebra = load_lattice(source)
        except LatticeError as e:
            return failure_report(e)
        return verdict_report(True, details={
            'elements': list(algebra.elements),
            'top': algebra.top,
            'bottom': algebra.bottom,
            'atoms': algebra.atoms(),
            'chain': algebra.is_chain(),
            'boolean': algebra.is_boolean(),
            'implication_table': implication_table(algebra),
        })

    def _lattice_operation(self, source: str,
                           operation: Callable[[HeytingAlgebra], str]
                           ) -> Report:
        return value_report(operation(load_lattice(source)))

    @reporting("lattice meet")
    def lattice_meet(self, source: str, u: str, v: str) -> Report:
        return self._lattice_operation(
            source, lambda algebra: algebra.meet(u, v))

    @reporting("lattice join")
    def lattice_join(self, source: str, u: str, v: str) -> Report:
        return self._lattice_operation(
            source, lambda algebra: algebra.join(u, v))

    @reporting("lattice implies")
    def lattice_implies(self, source: str, u: str, v: str) -> Report:
        return self._lattice_operation(
            source, lambda algebra: algebra.implies(u, v))

    @reporting("lattice not")
    def lattice_not(self, source: str, u: str) -> Report:
        return self._lattice_operation(
            source, lambda algebra: algebra.pseudo_complement(u))

    # Spaces

    @reporting("space check")
    def space_check(self, source: str) -> Report:
        try:
            space = load_space(source)
        except SpaceError as e:
            return failure_report(e)
        return verdict_report(True, details={
            'points': list(space.points),
            'opens': space.labels(),
            'specialization': [
                f"{lower}<={upper}"
                for lower, upper in space.specialization_preorder()
            ],
        })

    @reporting("space alexandrov")
    def space_alexandrov(self, points: str, relations: Iterable[str]
                         ) -> Report:
        pairs = []
        for relation in relations:
            lower, separator, upper = relation.partition('<=')
            if not separator or not lower.strip() or not upper.strip():
                raise InputParseError(
                    f"Expected 'x<=y', not '{relation}'", position=relation)
            pairs.append((lower.strip(), upper.strip()))
        space = FiniteSpace.from_preorder(split_points(points), pairs)
        return value_report(space.labels(), details={
            'space': space.serialise(),
        })

    def _space_operation(self, source: str, point_set: str,
                         operation: Callable[[FiniteSpace, tuple], frozenset]
                         ) -> Report:
        space = load_space(source)
        return value_report(
            space.label(operation(space, split_points(point_set))))

    @reporting("space interior")
    def space_interior(self, source: str, point_set: str) -> Report:
        return self._space_operation(
            source, point_set, FiniteSpace.interior)

    @reporting("space closure")
    def space_closure(self, source: str, point_set: str) -> Report:
        return self._space_operation(
            source, point_set, FiniteSpace.closure)

    @reporting("space boundary")
    def space_boundary(self, source: str, point_set: str) -> Report:
        return self._space_operation(
            source, point_set, FiniteSpace.boundary)

    @reporting("space connected")
    def space_connected(self, source: str, _open: str) -> Report:
        space = load_space(source)
        components = space.components(split_points(_open))
        labels = tuple(map(space.label, components))
        if len(components) <= 1:
            return verdict_report(True, details={'components': labels})
        return verdict_report(
            False, witness=labels, details={'components': labels},
            note="splits into disjoint non-empty opens")

    @reporting("space continuous")
    def space_continuous(self, source: str, target: str, mapping: str
                         ) -> Report:
        domain, codomain = load_space(source), load_space(target)
        point_map = load_point_map(mapping, domain, codomain)
        continuous, witness = point_map.is_continuous()
        if continuous:
            return verdict_report(True, details={
                'homeomorphism': point_map.is_homeomorphism(),
            })
        return verdict_report(
            False, witness=(witness,),
            note=f"the preimage of {witness} is not open")

    @reporting("space opens-lattice")
    def space_opens_lattice(self, source: str) -> Report:
        return value_report(load_space(source).opens_lattice().serialise())

    # The line

    def _region_operation(self, operation: Callable[..., OpenRegion],
                          *sources: str) -> Report:
        region = operation(*map(load_region, sources))
        return value_report(str(region), details={
            'region': region.serialise(),
        })

    @reporting("line meet")
    def line_meet(self, first: str, second: str) -> Report:
        return self._region_operation(region_meet, first, second)

    @reporting("line join")
    def line_join(self, first: str, second: str) -> Report:
        return self._region_operation(region_join, first, second)

    @reporting("line not")
    def line_not(self, source: str) -> Report:
        return self._region_operation(region_not, source)

    @reporting("line implies")
    def line_implies(self, first: str, second: str) -> Report:
        return self._region_operation(region_implies, first, second)

    @reporting("line boundary")
    def line_boundary(self, source: str) -> Report:
        return value_report(tuple(
            map(format_rational, region_boundary(load_region(source)))))

    @reporting("line divide")
    def line_divide(self, source: str, at: str) -> Report:
        region = load_region(source)
        w, v = divide(region, at)
        return value_report((str(w), str(v)), details={
            'parts': [w.serialise(), v.serialise()],
        })

    @reporting("line compact")
    def line_compact(self, source: str) -> Report:
        region = load_region(source)
        if is_compact_complement(region):
            return verdict_report(True)
        return verdict_report(
            False, witness=(str(region),),
            note="the complement is not bounded")

    @reporting("line germ")
    def line_germ(self, function: str, at: str) -> Report:
        germ = germ_at(load_piecewise(function), at)
        return value_report(str(germ), details={'germ': germ.serialise()})

    @reporting("line strata")
    def line_strata(self, function: str, k_max: Optional[int] = None
                    ) -> Report:
        if k_max is None:
            k_max = self.settings.k_max
        f = load_piecewise(function)
        found = strata(f, k_max)
        return value_report(_regions_text(found), details={
            'strata': [stratum.serialise() for stratum in found],
            'catastrophe_set': list(map(format_rational, catastrophe_set(f))),
            'k_max': k_max,
        })

    @reporting("line ivt")
    def line_ivt(self, function: str, a: str, b: str, target: str) -> Report:
        return value_report(ivt_witness(load_piecewise(function), a, b, target))

    @reporting("line image")
    def line_image(self, function: str, a: str, b: str) -> Report:
        return value_report(image_of_interval(load_piecewise(function), a, b))

    @reporting("line halving")
    def line_halving(self, source: str, steps: int) -> Report:
        return value_report(
            _regions_text(halving_chain(load_region(source), steps)))

    # Axioms

    def _load_algebra(self, lattice: Optional[str], space: Optional[str]
                      ) -> HeytingAlgebra:
        if (lattice is None) == (space is None):
            raise InputParseError("Give exactly one of a lattice or a space")
        if lattice is not None:
            return load_lattice(lattice)
        return load_space(space).opens_lattice()

    @reporting("axioms check")
    def axioms_check(self, lattice: Optional[str] = None,
                     space: Optional[str] = None, mode: Optional[str] = None
                     ) -> Report:
        mode = AxiomMode.parse(mode or self.settings.default_mode)
        algebra = self._load_algebra(lattice, space)
        reports = check_all(algebra, mode, self.make_progress())
        failing = {
            report.axiom.value: report.witness
            for report in reports
            if not report.holds
        }
        return verdict_report(
            not failing, witness=failing or None, mode=mode.dashed,
            details={
                'reports': [report.serialise() for report in reports],
            },
            note="; ".join(
                f"{report.axiom.dashed}: {report.note}"
                for report in reports
                if report.note
            ) or None)

    @reporting("axioms check-line")
    def axioms_check_line(self, samples: Optional[str] = None,
                          regions: Iterable[str] = (), random: bool = False,
                          count: Optional[int] = None) -> Report:
        seed = self.get_seed()
        sampled = []
        if samples is not None:
            sampled.extend(load_regions(samples))
        sampled.extend(map(load_region, regions))
        if random:
            if count is None:
                count = self.settings.line_sample_count
            sampled.extend(random_regions(seed, count, allow_empty=False))
        if not sampled:
            raise InputParseError(
                "There are no regions to check: give a samples file, some "
                "regions, or ask for random ones")
        report = check_divisibility_line(sampled, self.make_progress())
        return verdict_report(
            report.holds, witness=report.witness, note=report.note,
            mode=report.mode.dashed, seed=seed,
            details={'checked': len(sampled)})

    @reporting("axioms check-points")
    def axioms_check_points(self, points: Iterable[str]) -> Report:
        points = list(points)
        if not points:
            raise InputParseError("There are no points to check")
        report = check_point_divisibility_line(points)
        return verdict_report(
            report.holds, witness=report.witness, note=report.note,
            mode=report.mode.dashed)

    # Sheaves

    @reporting("sheaf check")
    def sheaf_check(self, source: str) -> Report:
        verdict = check_sheaf(load_presheaf(source), self.make_progress())
        if verdict.is_sheaf:
            return verdict_report(True)
        return verdict_report(
            False, witness=verdict.witness, note=str(verdict.witness),
            details={
                'failures': list(map(str, verdict.failures)),
            })

    @reporting("sheaf stalk")
    def sheaf_stalk(self, source: str, point: str) -> Report:
        stalk = stalk_at_point(load_presheaf(source), point)
        return value_report(
            stalk.canonical_sections, details={'stalk': stalk.serialise()})

    @reporting("sheaf topos")
    def sheaf_topos(self, source: str, closed_set: str) -> Report:
        stalk = topos_of(load_presheaf(source), split_points(closed_set))
        return value_report(
            stalk.canonical_sections, details={'stalk': stalk.serialise()})

    @reporting("sheaf hull")
    def sheaf_hull(self, source: str, mapping: str, point_set: str
                   ) -> Report:
        space = load_space(source)
        phi: PointMap = load_point_map(mapping, space, space)
        hull = invariant_hull(space, phi, split_points(point_set))
        return value_report(space.label(hull), details={
            'invariant_opens': list(map(
                space.label, invariant_opens(space, phi))),
        })

    # Nilpotents

    @reporting("nil arith")
    def nil_arith(self, x: str, operation: str, y: str,
                  order: Optional[int] = None) -> Report:
        first = TruncatedPoly.parse(x, order)
        if operation == 'pow':
            exponent = parse_rational(y)
            if exponent.denominator != 1 or exponent < 0:
                raise InputParseError(
                    f"The exponent must be a natural number, not {y}",
                    position=y)
            result = first ** int(exponent)
        else:
            result = ARITHMETIC_OPERATIONS[operation](
                first, TruncatedPoly.parse(y, order))
        return value_report(str(result), details={
            'result': result.serialise(),
        })

    @reporting("nil lift")
    def nil_lift(self, polynomial: str, at: str, order: int = 2) -> Report:
        f = Polynomial.parse(polynomial)
        lifted = lift_and_eval(f, at, order)
        return value_report(str(lifted), details={
            'lifted': lifted.serialise(),
            'derivatives': higher_derivatives(f, at, order),
        })

    @reporting("nil derive")
    def nil_derive(self, polynomial: str, at: str, order: int = 2) -> Report:
        f = Polynomial.parse(polynomial)
        details = {}
        if order > 2:
            details['derivatives'] = higher_derivatives(f, at, order)
        return value_report(derivative(f, at), details=details)

    @reporting("nil leibniz")
    def nil_leibniz(self, y: str, z: str, order: Optional[int] = None
                    ) -> Report:
        trace = leibniz_check(
            TruncatedPoly.parse(y, order), TruncatedPoly.parse(z, order))
        witness = None if trace.holds \
            else (str(trace.difference), format_rational(trace.middle))
        return verdict_report(
            trace.holds, value=str(trace.difference), witness=witness,
            details={
                'trace': trace.lines(),
                'discarded': trace.discarded,
                'middle': trace.middle,
            })

    # Logic

    @reporting("logic parse")
    def logic_parse(self, formula: str) -> Report:
        parsed = parse_formula(formula)
        return value_report(to_text(parsed), details={
            'ast': describe(parsed),
            'atoms': atoms(parsed),
        })

    @reporting("logic eval")
    def logic_eval(self, formula: str, lattice: Optional[str] = None,
                   assignments: Iterable[str] = (),
                   region_assignments: Iterable[str] = ()) -> Report:
        assignments = parse_assignments(assignments)
        region_assignments = parse_assignments(region_assignments)
        if lattice is not None:
            if region_assignments:
                raise InputParseError(
                    "Regions can only be assigned on the line, without a "
                    "lattice")
            value = evaluate(formula, load_lattice(lattice), assignments)
            return value_report(value)
        if assignments:
            raise InputParseError(
                "Elements can only be assigned with a lattice; use regions "
                "for the line")
        value = evaluate(formula, LineFrame(), {
            name: load_region(source)
            for name, source in region_assignments.items()
        })
        return value_report(str(value), details={
            'region': value.serialise(),
        })

    @reporting("logic valid")
    def logic_valid(self, formula: str, lattice: str,
                    budget: Optional[int] = None) -> Report:
        if budget is None:
            budget = self.settings.valuation_budget
        result = is_valid(
            formula, load_lattice(lattice), budget, self.make_progress())
        if result.valid:
            return verdict_report(True, details={'checked': result.checked})
        return verdict_report(
            False, witness=result.counter_valuation,
            details={'checked': result.checked, 'value': result.value})

    @reporting("logic counter")
    def logic_counter(self, formula: str, max_size: Optional[int] = None
                      ) -> Report:
        if max_size is None:
            max_size = self.settings.countermodel_max_size
        countermodel = find_countermodel(
            formula, max_size, self.settings.valuation_budget,
            self.make_progress())
        if countermodel is None:
            return verdict_report(
                True, note=f"no countermodel up to size {max_size}")
        return value_report(
            countermodel.name, witness=countermodel.assignment,
            details={'countermodel': countermodel.serialise()})

"""
The definition of the command line interface, using `click`.

Not actual work is defined here, but merely how to interact from the console.
All work is delegated to `Controller`, and the exit code comes from the
verdict of its report: 0 when a property holds or a value was computed, 1 when
a property fails, and 2 for malformed input.
"""
import click

from aristo.controller.controller import Controller
from aristo.errors import UnknownCommand
from aristo.report import Report, OutputFormat, emit
from aristo.axioms import AxiomMode
from aristo.settings import settings_proxy
from aristo.version import ARISTO_VERSION_LABEL

__all__ = ['cli', 'create_cli', 'AristoGroup']


class AristoGroup(click.Group):
    """
    A group that reports unknown commands like any other malformed input
    """
    def group(self, *args, **kwargs):
        kwargs.setdefault('cls', AristoGroup)
        return super().group(*args, **kwargs)

    def resolve_command(self, ctx, args):
        name = args[0]
        if self.get_command(ctx, name) is None \
                and not name.startswith('-') and not ctx.resilient_parsing:
            command = f"{ctx.command_path} {name}"
            json_output = ctx.find_root().params.get('json_output', False)
            emit(
                Report.from_error(command, UnknownCommand(
                    f"Unknown command '{name}', use {ctx.command_path} "
                    f"--help to see the commands", witness=(name,))),
                OutputFormat.from_flag(json_output))
            ctx.exit(2)
        return super().resolve_command(ctx, args)


def finish(ctx: click.Context, report: Report) -> None:
    ctx.exit(report.exit_code)


def create_cli():
    """Create a CLI instance to run"""
    controller = Controller()

    @click.group(
        cls=AristoGroup,
        help=(
            "Check the axioms of pointless topology on finite Heyting "
            "algebras and on the open regions of the line, and compute with "
            "finite spaces, sheaves, nilpotents and intuitionistic formulas\n"
            "\n"
            f"Version: {ARISTO_VERSION_LABEL}"
        ),
        short_help="Pointless topology workbench",
    )
    @click.option('--json', 'json_output', is_flag=True,
                  help="Output the report as JSON")
    @click.option('--seed', type=int, default=None,
                  help="The seed for random sampling")
    @click.option('--debug', '-d', is_flag=True,
                  help="Show progress of long checks on stderr")
    @click.pass_context
    def aristo(ctx, json_output=False, seed=None, debug=False):
        # `init-settings` should not warn about the settings it's replacing
        if ctx.invoked_subcommand != 'init-settings':
            settings_proxy.ensure_default()
        controller.output_format = OutputFormat.from_flag(json_output)
        controller.seed = seed
        controller.debug = debug

    @aristo.command(
        help=(
            f"Show current version: {ARISTO_VERSION_LABEL}"
        ),
        short_help=f"Current version: {ARISTO_VERSION_LABEL}",
    )
    def version():
        click.echo(ARISTO_VERSION_LABEL)

    @aristo.command(
        help=(
            "Initialise settings for the `aristo` utility, to change the "
            "default seed, mode, and search limits"
        ),
        short_help="Initialise local settings",
    )
    def init_settings():
        controller.init_settings()

    lattice_option = click.option(
        '--lattice', '-l', 'source', required=True,
        help="A lattice JSON file, or a name like chain-3 or boolean-4")
    space_option = click.option(
        '--space', '-s', 'source', required=True,
        help="A space JSON file, or a name like sierpinski or discrete-2")
    presheaf_option = click.option(
        '--presheaf', '-p', 'source', required=True,
        help="A presheaf JSON file, or one of sierpinski, constant, functions")
    function_option = click.option(
        '--fn', '-f', 'function', required=True,
        help="A piecewise function JSON file, abs, step, or polynomial "
             "coefficients like 0,-2,0,1")
    order_option = click.option(
        '--order', '-n', type=int, default=None,
        help="The power of ε that is zero")

    @aristo.group(
        help="Validate finite Heyting algebras and compute in them",
        short_help="Finite Heyting algebras",
    )
    def lattice():
        pass

    @lattice.command(
        name='check',
        help="Check that the input is a Heyting algebra",
        short_help="Check a lattice",
    )
    @lattice_option
    @click.pass_context
    def lattice_check(ctx, source):
        finish(ctx, controller.lattice_check(source))

    @lattice.command(
        name='meet', help="The meet of two elements", short_help="Meet")
    @lattice_option
    @click.argument('u')
    @click.argument('v')
    @click.pass_context
    def lattice_meet(ctx, source, u, v):
        finish(ctx, controller.lattice_meet(source, u, v))

    @lattice.command(
        name='join', help="The join of two elements", short_help="Join")
    @lattice_option
    @click.argument('u')
    @click.argument('v')
    @click.pass_context
    def lattice_join(ctx, source, u, v):
        finish(ctx, controller.lattice_join(source, u, v))

    @lattice.command(
        name='implies',
        help="The largest element whose meet with U is below V",
        short_help="Implication")
    @lattice_option
    @click.argument('u')
    @click.argument('v')
    @click.pass_context
    def lattice_implies(ctx, source, u, v):
        finish(ctx, controller.lattice_implies(source, u, v))

    @lattice.command(
        name='not',
        help="The largest element disjoint from U",
        short_help="Pseudo-complement")
    @lattice_option
    @click.argument('u')
    @click.pass_context
    def lattice_not(ctx, source, u):
        finish(ctx, controller.lattice_not(source, u))

    @aristo.group(
        help="Finite topological spaces, given by their opens",
        short_help="Finite spaces",
    )
    def space():
        pass

    @space.command(
        name='check',
        help="Check that the opens form a topology",
        short_help="Check a space")
    @space_option
    @click.pass_context
    def space_check(ctx, source):
        finish(ctx, controller.space_check(source))

    @space.command(
        name='alexandrov',
        help=(
            "The space whose opens are the down-closed sets of a preorder, "
            "given as relations like p<=q"
        ),
        short_help="Space of a preorder")
    @click.option('--points', required=True, help="Points like p,q")
    @click.option('--leq', 'relations', multiple=True,
                  help="A relation like p<=q")
    @click.pass_context
    def space_alexandrov(ctx, points, relations):
        finish(ctx, controller.space_alexandrov(points, relations))

    @space.command(
        name='interior', help="The largest open inside a set",
        short_help="Interior")
    @space_option
    @click.option('--set', 'point_set', required=True, help="Points like p,q")
    @click.pass_context
    def space_interior(ctx, source, point_set):
        finish(ctx, controller.space_interior(source, point_set))

    @space.command(
        name='closure', help="The smallest closed set around a set",
        short_help="Closure")
    @space_option
    @click.option('--set', 'point_set', required=True, help="Points like p,q")
    @click.pass_context
    def space_closure(ctx, source, point_set):
        finish(ctx, controller.space_closure(source, point_set))

    @space.command(
        name='boundary', help="The closure without the interior",
        short_help="Boundary")
    @space_option
    @click.option('--set', 'point_set', required=True, help="Points like p,q")
    @click.pass_context
    def space_boundary(ctx, source, point_set):
        finish(ctx, controller.space_boundary(source, point_set))

    @space.command(
        name='connected',
        help="Check that an open doesn't split into disjoint non-empty opens",
        short_help="Connectedness")
    @space_option
    @click.option('--open', '_open', required=True, help="Points like p,q")
    @click.pass_context
    def space_connected(ctx, source, _open):
        finish(ctx, controller.space_connected(source, _open))

    @space.command(
        name='continuous',
        help="Check that the preimage of every open is open",
        short_help="Continuity")
    @click.option('--source', '-s', 'source', required=True,
                  help="The space the map is from")
    @click.option('--target', '-t', 'target', required=True,
                  help="The space the map is to")
    @click.option('--map', '-m', 'mapping', required=True,
                  help="A map JSON file, or inline like p=q,q=q")
    @click.pass_context
    def space_continuous(ctx, source, target, mapping):
        finish(ctx, controller.space_continuous(source, target, mapping))

    @space.command(
        name='opens-lattice',
        help="The Heyting algebra of the opens",
        short_help="Opens lattice")
    @space_option
    @click.pass_context
    def space_opens_lattice(ctx, source):
        finish(ctx, controller.space_opens_lattice(source))

    @aristo.group(
        help=(
            "Open regions of the line, as unions of open intervals with "
            "rational or infinite endpoints, like '(0, 1) u (2, +inf)', and "
            "piecewise polynomial functions"
        ),
        short_help="The line",
    )
    def line():
        pass

    @line.command(name='meet', help="The intersection of two regions",
                  short_help="Meet")
    @click.argument('first')
    @click.argument('second')
    @click.pass_context
    def line_meet(ctx, first, second):
        finish(ctx, controller.line_meet(first, second))

    @line.command(name='join', help="The union of two regions",
                  short_help="Join")
    @click.argument('first')
    @click.argument('second')
    @click.pass_context
    def line_join(ctx, first, second):
        finish(ctx, controller.line_join(first, second))

    @line.command(name='not', help="The interior of the complement",
                  short_help="Pseudo-complement")
    @click.argument('region')
    @click.pass_context
    def line_not(ctx, region):
        finish(ctx, controller.line_not(region))

    @line.command(
        name='implies',
        help="The interior of the complement of FIRST, joined with SECOND",
        short_help="Implication")
    @click.argument('first')
    @click.argument('second')
    @click.pass_context
    def line_implies(ctx, first, second):
        finish(ctx, controller.line_implies(first, second))

    @line.command(name='boundary', help="The finite endpoints of a region",
                  short_help="Boundary")
    @click.argument('region')
    @click.pass_context
    def line_boundary(ctx, region):
        finish(ctx, controller.line_boundary(region))

    @line.command(name='divide',
                  help="Split a region at a point inside it",
                  short_help="Divide")
    @click.argument('region')
    @click.option('--at', required=True, help="A rational like 1/2")
    @click.pass_context
    def line_divide(ctx, region, at):
        finish(ctx, controller.line_divide(region, at))

    @line.command(name='compact',
                  help="Check that the complement of a region is bounded",
                  short_help="Compact complement")
    @click.argument('region')
    @click.pass_context
    def line_compact(ctx, region):
        finish(ctx, controller.line_compact(region))

    @line.command(name='germ',
                  help="The pieces of a function on either side of a point",
                  short_help="Germ")
    @function_option
    @click.option('--at', required=True, help="A rational like 1/2")
    @click.pass_context
    def line_germ(ctx, function, at):
        finish(ctx, controller.line_germ(function, at))

    @line.command(
        name='strata',
        help="Split the line into the regions and points of equal smoothness",
        short_help="Strata")
    @function_option
    @click.option('--k-max', type=int, default=None,
                  help="The highest smoothness to tell apart")
    @click.pass_context
    def line_strata(ctx, function, k_max):
        finish(ctx, controller.line_strata(function, k_max))

    @line.command(
        name='ivt',
        help=(
            "The leftmost point in [A, B] where a continuous piecewise-linear "
            "function takes a value"
        ),
        short_help="Intermediate value")
    @function_option
    @click.option('--a', 'a', required=True)
    @click.option('--b', 'b', required=True)
    @click.option('--target', '-c', 'target', required=True)
    @click.pass_context
    def line_ivt(ctx, function, a, b, target):
        finish(ctx, controller.line_ivt(function, a, b, target))

    @line.command(
        name='image',
        help="The image of [A, B] under a continuous piecewise-linear function",
        short_help="Image of an interval")
    @function_option
    @click.option('--a', 'a', required=True)
    @click.option('--b', 'b', required=True)
    @click.pass_context
    def line_image(ctx, function, a, b):
        finish(ctx, controller.line_image(function, a, b))

    @line.command(
        name='halving',
        help="The nested regions got by halving the first interval",
        short_help="Halving chain")
    @click.argument('region')
    @click.option('--steps', type=click.IntRange(min=0), default=5)
    @click.pass_context
    def line_halving(ctx, region, steps):
        finish(ctx, controller.line_halving(region, steps))

    @aristo.group(
        help=(
            "Check global connectivity, local connectivity and divisibility, "
            "either as written or with the side conditions they need"
        ),
        short_help="The axioms",
    )
    def axioms():
        pass

    @axioms.command(
        name='check',
        help="Check the three axioms on a lattice, or on the opens of a space",
        short_help="Check a lattice")
    @click.option('--lattice', '-l', default=None)
    @click.option('--space', '-s', default=None)
    @click.option('--mode', type=click.Choice(AxiomMode.dashed_choices()),
                  default=None)
    @click.pass_context
    def axioms_check(ctx, lattice, space, mode):
        finish(ctx, controller.axioms_check(lattice, space, mode))

    @axioms.command(
        name='check-line',
        help="Check divisibility on sample regions of the line",
        short_help="Check the line")
    @click.option('--samples', default=None,
                  help="A JSON file with a list of regions")
    @click.option('--region', 'regions', multiple=True)
    @click.option('--random', 'random', is_flag=True,
                  help="Add random regions, from the seed")
    @click.option('--count', type=click.IntRange(min=0), default=None,
                  help="How many random regions to add")
    @click.pass_context
    def axioms_check_line(ctx, samples, regions, random, count):
        finish(ctx, controller.axioms_check_line(
            samples, regions, random, count))

    @axioms.command(
        name='check-points',
        help="Check that points divide the line into two rays",
        short_help="Check points")
    @click.option('--point', 'points', multiple=True, required=True)
    @click.pass_context
    def axioms_check_points(ctx, points):
        finish(ctx, controller.axioms_check_points(points))

    @aristo.group(
        help="Presheaves of finite sets on finite spaces",
        short_help="Sheaves",
    )
    def sheaf():
        pass

    @sheaf.command(
        name='check',
        help="Check that every compatible family glues uniquely",
        short_help="Check gluing")
    @presheaf_option
    @click.pass_context
    def sheaf_check(ctx, source):
        finish(ctx, controller.sheaf_check(source))

    @sheaf.command(
        name='stalk', help="The germs of sections at a point",
        short_help="Stalk")
    @presheaf_option
    @click.option('--point', required=True)
    @click.pass_context
    def sheaf_stalk(ctx, source, point):
        finish(ctx, controller.sheaf_stalk(source, point))

    @sheaf.command(
        name='topos', help="The germs of sections around a closed set",
        short_help="Germs on a closed set")
    @presheaf_option
    @click.option('--closed', 'closed_set', required=True,
                  help="Points like q,r")
    @click.pass_context
    def sheaf_topos(ctx, source, closed_set):
        finish(ctx, controller.sheaf_topos(source, closed_set))

    @sheaf.command(
        name='hull',
        help=(
            "The smallest open around a set that a homeomorphism maps onto "
            "itself"
        ),
        short_help="Invariant hull")
    @space_option
    @click.option('--perm', 'mapping', required=True,
                  help="A map JSON file, or inline like p=q,q=p")
    @click.option('--set', 'point_set', required=True, help="Points like q")
    @click.pass_context
    def sheaf_hull(ctx, source, mapping, point_set):
        finish(ctx, controller.sheaf_hull(source, mapping, point_set))

    @aristo.group(
        help=(
            "Numbers with a nilpotent ε, given by constant-first coefficients "
            "like 3,5 for 3 + 5ε"
        ),
        short_help="Nilpotents",
    )
    def nil():
        pass

    @nil.command(
        name='arith', help="Add, subtract, multiply or raise to a power",
        short_help="Arithmetic")
    @click.argument('x')
    @click.argument('operation', type=click.Choice(['add', 'sub', 'mul', 'pow']))
    @click.argument('y')
    @order_option
    @click.pass_context
    def nil_arith(ctx, x, operation, y, order):
        finish(ctx, controller.nil_arith(x, operation, y, order))

    @nil.command(
        name='lift', help="Evaluate a polynomial at x + ε",
        short_help="Lift")
    @click.option('--poly', 'polynomial', required=True)
    @click.option('--at', required=True)
    @click.option('--order', '-n', type=click.IntRange(min=2), default=2)
    @click.pass_context
    def nil_lift(ctx, polynomial, at, order):
        finish(ctx, controller.nil_lift(polynomial, at, order))

    @nil.command(
        name='derive',
        help="The derivative of a polynomial, read off f(x + ε)",
        short_help="Derivative")
    @click.option('--poly', 'polynomial', required=True)
    @click.option('--at', required=True)
    @click.option('--order', '-n', type=click.IntRange(min=2), default=2)
    @click.pass_context
    def nil_derive(ctx, polynomial, at, order):
        finish(ctx, controller.nil_derive(polynomial, at, order))

    @nil.command(
        name='leibniz',
        help="Expand d(yz), showing the dy dz term that ε^2 = 0 discards",
        short_help="Leibniz rule")
    @click.option('--y', 'y', required=True)
    @click.option('--z', 'z', required=True)
    @order_option
    @click.pass_context
    def nil_leibniz(ctx, y, z, order):
        finish(ctx, controller.nil_leibniz(y, z, order))

    @aristo.group(
        help=(
            "Intuitionistic propositional formulas, with ~ & | -> <-> top bot"
        ),
        short_help="Logic",
    )
    def logic():
        pass

    formula_option = click.option('--formula', '-F', required=True)

    @logic.command(
        name='parse', help="Parse and print a formula",
        short_help="Parse")
    @formula_option
    @click.pass_context
    def logic_parse(ctx, formula):
        finish(ctx, controller.logic_parse(formula))

    @logic.command(
        name='eval',
        help=(
            "Evaluate a formula in a lattice, or on the line when regions are "
            "assigned"
        ),
        short_help="Evaluate")
    @formula_option
    @click.option('--lattice', '-l', default=None)
    @click.option('--assign', 'assignments', multiple=True,
                  help="An element for an atom, like p=a")
    @click.option('--assign-region', 'region_assignments', multiple=True,
                  help="A region for an atom, like 'p=(0, 1)' or p=file.json")
    @click.pass_context
    def logic_eval(ctx, formula, lattice, assignments, region_assignments):
        finish(ctx, controller.logic_eval(
            formula, lattice, assignments, region_assignments))

    @logic.command(
        name='valid', help="Check a formula on every valuation in a lattice",
        short_help="Validity")
    @formula_option
    @click.option('--lattice', '-l', required=True)
    @click.option('--budget', type=click.IntRange(min=1), default=None)
    @click.pass_context
    def logic_valid(ctx, formula, lattice, budget):
        finish(ctx, controller.logic_valid(formula, lattice, budget))

    @logic.command(
        name='counter',
        help="Search small algebras for one that refutes a formula",
        short_help="Countermodel")
    @formula_option
    @click.option('--max-size', type=click.IntRange(min=2), default=None)
    @click.pass_context
    def logic_counter(ctx, formula, max_size):
        finish(ctx, controller.logic_counter(formula, max_size))

    return aristo


cli = create_cli()

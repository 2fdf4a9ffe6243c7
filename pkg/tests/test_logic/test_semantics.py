import random
from itertools import product
from unittest import TestCase

from hypothesis import given, settings, strategies as st

from aristo.errors import FormulaSyntaxError, UnassignedAtom, TooManyAtoms
from aristo.lattice import chain, boolean_algebra, catalogued_algebras
from aristo.line import OpenRegion, region_leq, random_region
from aristo.logic import parse_formula, tokenize, to_text, atoms, evaluate, \
    is_valid, find_countermodel, LineFrame, Atom, Top, Bottom, And, Or
from tests.strategies import algebras_with_elements

INTUITIONISTIC_THEOREMS = [
    "p -> p",
    "p -> (q -> p)",
    "(p -> (q -> r)) -> ((p -> q) -> (p -> r))",
    "(p & q) -> p",
    "p -> (p | q)",
    "~(p & ~p)",
    "p -> ~~p",
    "~~~p -> ~p",
    "~(p | q) <-> (~p & ~q)",
    "~~(p | ~p)",
    "(p | q) & r <-> (p & r) | (q & r)",
    "bot -> p",
    "p -> top",
]

CLASSICAL_ONLY = [
    "p | ~p",
    "~~p -> p",
    "((p -> q) -> p) -> p",
    "(~p -> ~q) -> (q -> p)",
    "~(p & q) -> (~p | ~q)",
    "(p -> q) | (q -> p)",
]

SMALL_ALGEBRAS = catalogued_algebras(8)


class TestParser(TestCase):
    def test_round_trip_through_text(self):
        for text in INTUITIONISTIC_THEOREMS + CLASSICAL_ONLY:
            formula = parse_formula(text)
            self.assertEqual(parse_formula(to_text(formula)), formula, text)

    def test_atoms_in_order(self):
        self.assertEqual(atoms(parse_formula("q -> p & q")), ['q', 'p'])

    def test_syntax_errors(self):
        for text in ("p &", "(p", "p q", "", "p <-> q <-> r", "p & | q"):
            with self.assertRaises(FormulaSyntaxError, msg=text):
                parse_formula(text)

    def test_syntax_error_positions(self):
        positions = {
            "p &": 3,
            "(p": 2,
            "p q": 2,
            "": 0,
            "p <-> q <-> r": 8,
            "p & | q": 4,
            "p | & q": 4,
            "~": 1,
            "p $ q": 2,
            "  ()": 3,
        }
        for text, position in positions.items():
            with self.assertRaises(FormulaSyntaxError, msg=text) as context:
                parse_formula(text)
            self.assertEqual(context.exception.position, position, text)
            self.assertEqual(context.exception.witness, (position,), text)

    def test_names_and_constants(self):
        self.assertEqual(
            [token.kind for token in tokenize("top_1 -> bot")],
            ['name', 'implies', 'name', 'end'])
        self.assertEqual(parse_formula("top"), Top())
        self.assertEqual(parse_formula("(bot)"), Bottom())
        self.assertEqual(parse_formula("topx"), Atom('topx'))
        self.assertEqual(parse_formula("p<->q"), parse_formula("p <-> q"))
        self.assertEqual(
            parse_formula("p & q | r"),
            Or(And(Atom('p'), Atom('q')), Atom('r')))


class TestSoundness(TestCase):
    def test_theorems_hold_in_every_small_algebra(self):
        for text in INTUITIONISTIC_THEOREMS:
            for name, algebra in SMALL_ALGEBRAS:
                if len(algebra) ** len(atoms(parse_formula(text))) > 4096:
                    continue
                result = is_valid(text, algebra)
                self.assertTrue(result.valid, f"{text} in {name}")

    def test_theorems_hold_on_the_line(self):
        rng = random.Random(5)
        frame = LineFrame()
        for text in INTUITIONISTIC_THEOREMS:
            formula = parse_formula(text)
            for _ in range(50):
                assignment = {
                    name: random_region(rng)
                    for name in atoms(formula)
                }
                self.assertTrue(
                    evaluate(formula, frame, assignment).is_full(), text)

    @settings(max_examples=200, deadline=None)
    @given(algebras_with_elements(2))
    def test_modus_ponens(self, algebra_and_elements):
        algebra, a, b = algebra_and_elements
        value = evaluate(
            "p & (p -> q)", algebra, {'p': a, 'q': b})
        self.assertTrue(algebra.leq(value, b))


class TestCountermodels(TestCase):
    def test_classical_laws_have_small_countermodels(self):
        for text in CLASSICAL_ONLY:
            countermodel = find_countermodel(text, max_size=5)
            self.assertIsNotNone(countermodel, text)
            self.assertLessEqual(len(countermodel.algebra), 5)
            self.assertNotEqual(
                evaluate(text, countermodel.algebra,
                         countermodel.assignment),
                countermodel.algebra.top)

    def test_smallest_chain_is_three(self):
        for text in ("p | ~p", "~~p -> p", "((p -> q) -> p) -> p"):
            self.assertEqual(find_countermodel(text).name, 'chain-3', text)

    def test_linearity_needs_a_non_chain(self):
        countermodel = find_countermodel("(p -> q) | (q -> p)", max_size=5)
        self.assertFalse(countermodel.algebra.is_chain())

    def test_theorems_have_no_countermodel(self):
        for text in ("p -> p", "~(p & ~p)", "p -> ~~p"):
            self.assertIsNone(find_countermodel(text, max_size=4))

    def test_classical_laws_hold_in_boolean_algebras(self):
        for text in CLASSICAL_ONLY:
            for atom_count in (1, 2, 3):
                self.assertTrue(
                    is_valid(text, boolean_algebra(atom_count)).valid, text)

    def test_budget(self):
        with self.assertRaises(TooManyAtoms):
            is_valid("p & q & r", chain(3), budget=20)


class TestLineSemantics(TestCase):
    def test_excluded_middle_on_an_interval(self):
        value = evaluate(
            "p | ~p", LineFrame(), {'p': OpenRegion.parse("(0, 1)")})
        self.assertEqual(str(value), '(-inf, 0) u (0, 1) u (1, +inf)')

    def test_unassigned_atom(self):
        with self.assertRaises(UnassignedAtom):
            evaluate("p -> q", LineFrame(), {'p': OpenRegion.full()})

    def test_monotonicity(self):
        rng = random.Random(9)
        frame = LineFrame()
        formula = parse_formula("(q -> r) & (p | r)")
        for _ in range(300):
            small, other, third = (random_region(rng) for _ in range(3))
            large = frame.join(small, random_region(rng))
            low = evaluate(formula, frame, {'p': small, 'q': other, 'r': third})
            high = evaluate(formula, frame, {'p': large, 'q': other, 'r': third})
            self.assertTrue(region_leq(low, high))

    @settings(max_examples=100, deadline=None)
    @given(st.sampled_from(INTUITIONISTIC_THEOREMS + CLASSICAL_ONLY))
    def test_boolean_collapse(self, text):
        formula = parse_formula(text)
        names = atoms(formula)
        two = boolean_algebra(1)
        for values in product(two.elements, repeat=len(names)):
            self.assertEqual(
                evaluate(formula, two, dict(zip(names, values))), two.top)

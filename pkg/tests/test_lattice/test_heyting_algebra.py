from itertools import product
from unittest import TestCase

from aristo.errors import NotAPartialOrder, NotALattice, NotDistributive, \
    UnknownElement, InvalidBound
from aristo.lattice import HeytingAlgebra, build_lattice, chain, \
    boolean_algebra, diamond, pentagon, catalogued_algebras
from tests.utils import load_fixture

SMALL_ALGEBRAS = catalogued_algebras(8)


class TestHeytingLaws(TestCase):
    def test_catalogue_is_not_trivial(self):
        names = [name for name, _ in SMALL_ALGEBRAS]
        self.assertIn('chain-2', names)
        self.assertIn('boolean-8', names)
        self.assertIn('diamond', names)
        self.assertTrue(any(name.startswith('opens-') for name in names))

    def test_adjunction(self):
        for name, algebra in SMALL_ALGEBRAS:
            for a, b, c in product(algebra.elements, repeat=3):
                self.assertEqual(
                    algebra.leq(algebra.meet(a, b), c),
                    algebra.leq(a, algebra.implies(b, c)),
                    f"{name}: {a}, {b}, {c}")

    def test_meet_and_join_are_bounds(self):
        for name, algebra in SMALL_ALGEBRAS:
            for a, b in product(algebra.elements, repeat=2):
                meet, join = algebra.meet(a, b), algebra.join(a, b)
                self.assertTrue(algebra.leq(meet, a), name)
                self.assertTrue(algebra.leq(meet, b), name)
                self.assertTrue(algebra.leq(a, join), name)
                self.assertTrue(algebra.leq(b, join), name)
                self.assertEqual(algebra.meet(a, b), algebra.meet(b, a))
                self.assertEqual(algebra.join(a, b), algebra.join(b, a))

    def test_absorption_and_distributivity(self):
        for name, algebra in SMALL_ALGEBRAS:
            for a, b, c in product(algebra.elements, repeat=3):
                self.assertEqual(
                    algebra.meet(a, algebra.join(a, b)), a, name)
                self.assertEqual(
                    algebra.meet(a, algebra.join(b, c)),
                    algebra.join(algebra.meet(a, b), algebra.meet(a, c)),
                    name)

    def test_bounds(self):
        for name, algebra in SMALL_ALGEBRAS:
            for a in algebra.elements:
                self.assertTrue(algebra.leq(algebra.bottom, a), name)
                self.assertTrue(algebra.leq(a, algebra.top), name)
                self.assertEqual(
                    algebra.pseudo_complement(a),
                    algebra.implies(a, algebra.bottom))
                self.assertEqual(
                    algebra.meet(a, algebra.pseudo_complement(a)),
                    algebra.bottom)

    def test_implies_is_top_exactly_when_ordered(self):
        for name, algebra in SMALL_ALGEBRAS:
            for a, b in product(algebra.elements, repeat=2):
                self.assertEqual(
                    algebra.implies(a, b) == algebra.top,
                    algebra.leq(a, b), name)


class TestKnownAlgebras(TestCase):
    def test_chain(self):
        three = chain(3)
        self.assertEqual(three.elements, ('0', 'a', '1'))
        self.assertTrue(three.is_chain())
        self.assertFalse(three.is_boolean())
        self.assertEqual(three.implies('a', '0'), '0')
        self.assertEqual(three.pseudo_complement('0'), '1')

    def test_boolean_algebra(self):
        four = boolean_algebra(2)
        self.assertEqual(len(four), 4)
        self.assertTrue(four.is_boolean())
        self.assertEqual(four.pseudo_complement('x'), 'y')
        self.assertEqual(four.join('x', 'y'), four.top)

    def test_meet_and_join_of_many(self):
        four = boolean_algebra(2)
        self.assertEqual(four.meet_all(['x', '1', four.top]), 'x')
        self.assertEqual(four.meet_all([]), four.top)
        self.assertEqual(four.join_all(['x', 'y']), four.top)
        self.assertEqual(four.meet_all(['x', 'y']), four.bottom)

    def test_diamond_matches_boolean_four(self):
        self.assertEqual(len(diamond()), 4)
        self.assertTrue(diamond().is_boolean())
        self.assertEqual(diamond().implies('x', 'y'), 'y')

    def test_serialise_round_trip(self):
        for name, algebra in SMALL_ALGEBRAS[:10]:
            self.assertEqual(
                HeytingAlgebra.deserialise(algebra.serialise()), algebra,
                name)

    def test_fixture(self):
        algebra = HeytingAlgebra.deserialise(load_fixture('coarse2.json'))
        self.assertEqual((algebra.bottom, algebra.top), ('{}', '{p,q}'))


class TestInvalidLattices(TestCase):
    def test_cycle_is_not_a_partial_order(self):
        with self.assertRaises(NotAPartialOrder) as context:
            HeytingAlgebra.deserialise(load_fixture('cyclic_order.json'))
        self.assertEqual(
            set(context.exception.witness), {'a', 'b'})

    def test_duplicate_elements(self):
        with self.assertRaises(NotAPartialOrder):
            build_lattice(['0', '0', '1'], [('0', '1')])

    def test_no_top(self):
        with self.assertRaises(NotALattice):
            build_lattice(['0', 'x', 'y'], [('0', 'x'), ('0', 'y')])

    def test_no_elements(self):
        with self.assertRaises(NotALattice):
            build_lattice([], [])

    def test_pentagon_is_not_distributive(self):
        with self.assertRaises(NotDistributive):
            pentagon()
        with self.assertRaises(NotDistributive):
            HeytingAlgebra.deserialise(load_fixture('pentagon.json'))

    def test_unknown_element_in_order(self):
        with self.assertRaises(UnknownElement):
            build_lattice(['0', '1'], [('0', '2')])

    def test_unknown_element_in_operation(self):
        with self.assertRaises(UnknownElement):
            chain(3).meet('a', 'z')

    def test_bad_declared_bound(self):
        with self.assertRaises(InvalidBound):
            build_lattice(['0', 'a', '1'], [('0', 'a'), ('a', '1')], top='a')

from itertools import product
from unittest import TestCase

from aristo.errors import MissingEmptyOrFull, NotClosedUnderUnion, \
    NotClosedUnderIntersection, OpenMentionsUnknownPoint, NotAPreorder, \
    UnknownPoint, NotAnOpen
from aristo.space import FiniteSpace, sierpinski, discrete, coarse, \
    all_spaces, all_spaces_up_to_homeomorphism, all_preorders
from tests.utils import load_fixture


def all_subsets(space):
    return [
        frozenset(
            point
            for point, included in zip(space.points, includes)
            if included
        )
        for includes in product((False, True), repeat=len(space.points))
    ]


SMALL_SPACES = all_spaces(1) + all_spaces(2) + all_spaces(3)


class TestValidation(TestCase):
    def test_fixtures(self):
        self.assertEqual(
            FiniteSpace.deserialise(load_fixture('sierpinski.json')),
            sierpinski())
        self.assertEqual(
            FiniteSpace.deserialise(load_fixture('discrete2.json')).labels(),
            ['{}', '{p}', '{q}', '{p,q}'])

    def test_missing_full(self):
        with self.assertRaises(MissingEmptyOrFull) as context:
            FiniteSpace.deserialise(load_fixture('missing_full.json'))
        self.assertEqual(context.exception.witness, ('full',))

    def test_not_closed_under_union(self):
        with self.assertRaises(NotClosedUnderUnion):
            FiniteSpace.validate(
                ['p', 'q', 'r'], [[], ['p'], ['q'], ['p', 'q', 'r']])

    def test_not_closed_under_intersection(self):
        with self.assertRaises(NotClosedUnderIntersection):
            FiniteSpace.validate(
                ['p', 'q', 'r'],
                [[], ['p', 'q'], ['q', 'r'], ['p', 'q', 'r']])

    def test_unknown_point_in_open(self):
        with self.assertRaises(OpenMentionsUnknownPoint):
            FiniteSpace.validate(['p'], [[], ['p'], ['z']])

    def test_unknown_point_in_preorder(self):
        with self.assertRaises(NotAPreorder):
            FiniteSpace.from_preorder(['p'], [('p', 'z')])

    def test_unknown_point_in_subset(self):
        with self.assertRaises(UnknownPoint):
            sierpinski().interior({'z'})

    def test_components_need_an_open(self):
        with self.assertRaises(NotAnOpen):
            sierpinski().components({'q'})


class TestEnumeration(TestCase):
    def test_counts(self):
        self.assertEqual(
            [len(list(all_preorders(count))) for count in range(1, 5)],
            [1, 4, 29, 355])
        self.assertEqual(
            [len(all_spaces_up_to_homeomorphism(count))
             for count in range(1, 5)],
            [1, 3, 9, 33])

    def test_alexandrov_opens_are_down_sets(self):
        space = FiniteSpace.from_preorder(
            ['a', 'b', 'c'], [('a', 'b'), ('b', 'c')])
        self.assertEqual(
            space.labels(), ['{}', '{a}', '{a,b}', '{a,b,c}'])
        self.assertEqual(sorted(space.minimal_open('b')), ['a', 'b'])

    def test_specialization_preorder_round_trips(self):
        for space in SMALL_SPACES:
            rebuilt = FiniteSpace.from_preorder(
                space.points, space.specialization_preorder())
            self.assertEqual(set(rebuilt.opens), set(space.opens))


class TestOperators(TestCase):
    def test_interior_and_closure_invariants(self):
        for space in SMALL_SPACES:
            for subset in all_subsets(space):
                interior = space.interior(subset)
                closure = space.closure(subset)
                self.assertTrue(interior <= subset <= closure)
                self.assertTrue(space.is_open(interior))
                self.assertTrue(space.is_closed(closure))
                self.assertEqual(
                    space.boundary(subset), closure - interior)
                self.assertEqual(space.interior(interior), interior)
                self.assertEqual(space.closure(closure), closure)

    def test_sierpinski(self):
        space = sierpinski()
        self.assertEqual(space.closure({'p'}), frozenset('pq'))
        self.assertEqual(space.closure({'q'}), frozenset('q'))
        self.assertEqual(space.interior({'q'}), frozenset())
        self.assertEqual(space.boundary({'p'}), frozenset('q'))

    def test_coarse_closure_is_everything(self):
        space = coarse(['a', 'b', 'c'])
        self.assertEqual(space.closure({'a'}), space.full)
        self.assertEqual(space.interior({'a', 'b'}), frozenset())


class TestConnectivity(TestCase):
    def test_components_partition_the_open(self):
        for space in SMALL_SPACES:
            for _open in space.opens:
                parts = space.components(_open)
                self.assertEqual(frozenset().union(*parts), _open)
                self.assertEqual(
                    sum(map(len, parts)), len(_open))
                for part in parts:
                    self.assertTrue(space.is_open(part))
                    self.assertTrue(space.is_connected_open(part))
                self.assertEqual(
                    len(parts) <= 1, space.is_connected_open(_open))

    def test_empty_open_is_connected(self):
        self.assertTrue(discrete(['p', 'q']).is_connected_open(set()))
        self.assertEqual(discrete(['p', 'q']).components(set()), [])

    def test_discrete_splits_into_points(self):
        space = discrete(['a', 'b', 'c'])
        self.assertEqual(
            space.components(space.full),
            [frozenset('a'), frozenset('b'), frozenset('c')])
        self.assertFalse(space.is_connected_open(space.full))


class TestOpensLattice(TestCase):
    def test_labels_and_size(self):
        for space in SMALL_SPACES:
            algebra = space.opens_lattice()
            self.assertEqual(len(algebra), len(space.opens))
            self.assertEqual(algebra.bottom, '{}')
            self.assertEqual(algebra.top, space.label(space.full))

    def test_meet_and_join_are_intersection_and_union(self):
        for space in SMALL_SPACES:
            algebra = space.opens_lattice()
            for first, second in product(space.opens, repeat=2):
                self.assertEqual(
                    algebra.meet(space.label(first), space.label(second)),
                    space.label(first & second))
                self.assertEqual(
                    algebra.join(space.label(first), space.label(second)),
                    space.label(first | second))

    def test_pseudo_complement_is_interior_of_complement(self):
        for space in SMALL_SPACES:
            algebra = space.opens_lattice()
            for _open in space.opens:
                self.assertEqual(
                    algebra.pseudo_complement(space.label(_open)),
                    space.label(space.interior(space.complement(_open))))

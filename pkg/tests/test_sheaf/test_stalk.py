from unittest import TestCase

from aristo.errors import NotClosed, EmptySubset, UnknownPoint, \
    NotAHomeomorphism
from aristo.sheaf import stalk_at_point, stalk_by_quotient, topos_of, \
    sierpinski_presheaf, invariant_hull, invariant_opens
from aristo.space import FiniteSpace, PointMap, sierpinski
from tests.presheaves import small_presheaves


def three_point_space():
    return FiniteSpace.validate(
        ['1', '2', '3'], [[], ['1'], ['3'], ['1', '3'], ['1', '2', '3']])


def swap():
    space = three_point_space()
    return PointMap.build(space, space, {'1': '3', '2': '2', '3': '1'})


class TestStalks(TestCase):
    def test_germs_match_the_quotient(self):
        presheaves = [sierpinski_presheaf(), *small_presheaves()]
        for presheaf in presheaves:
            space = presheaf.space
            for point in space.points:
                stalk = stalk_at_point(presheaf, point)
                quotient = stalk_by_quotient(
                    presheaf, space.neighbourhoods({point}))
                self.assertEqual(
                    set(stalk.member_sets()), set(quotient), point)

    def test_sierpinski_stalks(self):
        presheaf = sierpinski_presheaf()
        self.assertEqual(stalk_at_point(presheaf, 'p').canonical_open, '{p}')
        self.assertEqual(
            stalk_at_point(presheaf, 'q').canonical_sections, ('s1', 's2'))

    def test_unknown_point(self):
        with self.assertRaises(UnknownPoint):
            stalk_at_point(sierpinski_presheaf(), 'z')


class TestTopos(TestCase):
    def test_closed_point_sees_the_global_sections(self):
        presheaf = sierpinski_presheaf()
        stalk = topos_of(presheaf, {'q'})
        self.assertEqual(
            stalk.canonical_sections, presheaf.sections_at({'p', 'q'}))
        self.assertEqual(stalk.canonical_open, '{p,q}')

    def test_closed_points_see_their_stalk(self):
        checked = 0
        for presheaf in small_presheaves():
            space = presheaf.space
            for point in space.points:
                if not space.is_closed({point}):
                    continue
                topos = topos_of(presheaf, {point})
                stalk = stalk_at_point(presheaf, point)
                self.assertEqual(topos.canonical_open, stalk.canonical_open)
                self.assertEqual(
                    topos.canonical_sections, stalk.canonical_sections)
                self.assertEqual(topos.member_sets(), stalk.member_sets())
                checked += 1
        self.assertGreater(checked, 0)

    def test_whole_space(self):
        presheaf = sierpinski_presheaf()
        self.assertEqual(
            topos_of(presheaf, {'p', 'q'}).canonical_sections, ('s1', 's2'))

    def test_errors(self):
        presheaf = sierpinski_presheaf()
        with self.assertRaises(NotClosed):
            topos_of(presheaf, {'p'})
        with self.assertRaises(EmptySubset):
            topos_of(presheaf, set())
        with self.assertRaises(UnknownPoint):
            topos_of(presheaf, {'z'})


class TestInvariantHull(TestCase):
    def test_hull_properties(self):
        space, phi = three_point_space(), swap()
        invariant = invariant_opens(space, phi)
        for point_set in ({'1'}, {'2'}, {'3'}, {'1', '3'}, set()):
            hull = invariant_hull(space, phi, point_set)
            self.assertTrue(space.is_open(hull))
            self.assertTrue(frozenset(point_set) <= hull)
            self.assertEqual(phi.image(hull), hull)
            self.assertIn(hull, invariant)
            for _open in invariant:
                if frozenset(point_set) <= _open:
                    self.assertTrue(hull <= _open)

    def test_hulls(self):
        space, phi = three_point_space(), swap()
        self.assertEqual(
            space.label(invariant_hull(space, phi, {'1'})), '{1,3}')
        self.assertEqual(
            space.label(invariant_hull(space, phi, {'2'})), '{1,2,3}')
        self.assertEqual(invariant_hull(space, phi, set()), frozenset())

    def test_identity_hull_is_minimal_open(self):
        space = three_point_space()
        identity = PointMap.identity(space)
        for point in space.points:
            self.assertEqual(
                invariant_hull(space, identity, {point}),
                space.minimal_open(point))

    def test_needs_a_homeomorphism(self):
        space = sierpinski()
        flip = PointMap.build(space, space, {'p': 'q', 'q': 'p'})
        with self.assertRaises(NotAHomeomorphism):
            invariant_hull(space, flip, {'p'})
        collapse = PointMap.build(space, space, {'p': 'p', 'q': 'p'})
        with self.assertRaises(NotAHomeomorphism):
            invariant_hull(space, collapse, {'p'})

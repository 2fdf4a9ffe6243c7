from unittest import TestCase

from aristo.errors import MissingRestriction, MissingSectionSet, \
    CompositionViolated, RestrictionConflict, IdentityViolated, \
    UnknownSection, InputParseError
from aristo.sheaf import Presheaf, check_sheaf, constant_presheaf, \
    functions_sheaf, sierpinski_presheaf, irredundant_covers
from aristo.space import sierpinski, discrete, coarse
from tests.presheaves import MAX_SECTIONS, check_sheaf_all_covers, \
    small_presheaves, small_spaces
from tests.utils import load_fixture


class TestPresheafValidation(TestCase):
    def test_fixtures(self):
        constant = Presheaf.deserialise(load_fixture('constant.json'))
        self.assertEqual(
            constant.sections,
            constant_presheaf(discrete(['p', 'q']), '01').sections)
        self.assertEqual(
            Presheaf.deserialise(load_fixture('sierpinski_presheaf.json'))
            .sections,
            sierpinski_presheaf().sections)

    def test_missing_restriction(self):
        with self.assertRaises(MissingRestriction):
            Presheaf.deserialise(load_fixture('missing_restriction.json'))

    def test_missing_section_set(self):
        with self.assertRaises(MissingSectionSet):
            Presheaf.build(sierpinski(), {0: ['*'], 1: ['t']}, {})

    def test_composites_are_generated(self):
        presheaf = Presheaf.deserialise(load_fixture('constant.json'))
        self.assertEqual(presheaf.restrict(3, 0, '1'), '*')
        self.assertEqual(presheaf.restrict('{p,q}', '{q}', '0'), '0')

    def test_declared_restriction_must_match_composite(self):
        with self.assertRaises(CompositionViolated):
            Presheaf.build(
                sierpinski(),
                {0: ['*', 'z'], 1: ['t'], 2: ['s']},
                {'2->1': {'s': 't'}, '1->0': {'t': '*'}, '2->0': {'s': 'z'}})

    def test_routes_must_agree(self):
        with self.assertRaises(RestrictionConflict):
            Presheaf.build(
                discrete(['p', 'q']),
                {0: ['*', 'z'], 1: ['a'], 2: ['b'], 3: ['c']},
                {'1->0': {'a': '*'}, '2->0': {'b': 'z'},
                 '3->1': {'c': 'a'}, '3->2': {'c': 'b'}})

    def test_restriction_must_go_to_a_smaller_open(self):
        with self.assertRaises(RestrictionConflict):
            Presheaf.build(
                sierpinski(), {0: ['*'], 1: ['t'], 2: ['s']},
                {'1->2': {'t': 's'}, '2->1': {'s': 't'}, '1->0': {'t': '*'}})

    def test_identity(self):
        with self.assertRaises(IdentityViolated):
            Presheaf.build(
                sierpinski(), {0: ['*'], 1: ['t', 'u'], 2: ['s']},
                {'1->1': {'t': 'u', 'u': 't'}, '2->1': {'s': 't'},
                 '1->0': {'t': '*', 'u': '*'}})

    def test_unknown_sections(self):
        with self.assertRaises(UnknownSection):
            Presheaf.build(
                sierpinski(), {0: ['*'], 1: ['t'], 2: ['s']},
                {'2->1': {'s': 'nope'}, '1->0': {'t': '*'}})
        with self.assertRaises(UnknownSection):
            sierpinski_presheaf().restrict(2, 1, 'nope')

    def test_malformed_restriction_key(self):
        with self.assertRaises(InputParseError):
            Presheaf.build(
                sierpinski(), {0: ['*'], 1: ['t'], 2: ['s']},
                {'2=>1': {'s': 't'}})

    def test_serialise_round_trip(self):
        for presheaf in (sierpinski_presheaf(),
                         functions_sheaf(discrete(['p', 'q']), '01')):
            rebuilt = Presheaf.deserialise(presheaf.serialise())
            self.assertEqual(rebuilt, presheaf)
            self.assertEqual(rebuilt.restrictions, presheaf.restrictions)


class TestGluing(TestCase):
    def test_constant_presheaf_is_not_a_sheaf(self):
        verdict = check_sheaf(
            Presheaf.deserialise(load_fixture('constant.json')))
        self.assertFalse(verdict.is_sheaf)
        self.assertEqual(verdict.witness.target, '{p,q}')
        self.assertEqual(verdict.witness.cover, ('{p}', '{q}'))
        self.assertEqual(verdict.witness.amalgamations, ())
        self.assertEqual(len(verdict.failures), 1)

    def test_constant_presheaf_without_singleton_fails_on_empty_open(self):
        verdict = check_sheaf(constant_presheaf(
            coarse(['p', 'q']), '01', singleton_on_empty=False))
        self.assertFalse(verdict.is_sheaf)
        self.assertEqual(verdict.failures[-1].target, '{}')
        self.assertEqual(verdict.failures[-1].cover, ())

    def test_constant_presheaf_on_connected_space_is_a_sheaf(self):
        self.assertTrue(check_sheaf(
            constant_presheaf(sierpinski(), '01')).is_sheaf)

    def test_functions_are_always_a_sheaf(self):
        for space in small_spaces(3):
            verdict = check_sheaf(functions_sheaf(space, '01'))
            self.assertTrue(verdict.is_sheaf, space)
            self.assertIsNone(verdict.witness)

    def test_sierpinski_presheaf_is_a_sheaf(self):
        self.assertTrue(check_sheaf(sierpinski_presheaf()).is_sheaf)

    def test_irredundant_covers(self):
        space = discrete(['a', 'b', 'c'])
        full_index = len(space.opens) - 1
        covers = irredundant_covers(space, full_index)
        self.assertIn((full_index,), covers)
        for cover in covers:
            members = [space.opens[index] for index in cover]
            self.assertEqual(frozenset().union(*members), space.full)

    def test_irredundant_covers_agree_with_all_covers(self):
        verdicts = []
        for presheaf in small_presheaves():
            verdict = check_sheaf(presheaf)
            self.assertEqual(
                verdict.is_sheaf, check_sheaf_all_covers(presheaf),
                presheaf.serialise())
            self.assertEqual(verdict.is_sheaf, not verdict.failures)
            verdicts.append(verdict.is_sheaf)
        self.assertIn(True, verdicts)
        self.assertIn(False, verdicts)

    def test_small_presheaves_stay_small(self):
        for presheaf in small_presheaves():
            self.assertLessEqual(len(presheaf.space.points), 4)
            self.assertLessEqual(
                max(map(len, presheaf.sections)), MAX_SECTIONS)

    def test_duplicated_section_breaks_gluing(self):
        presheaf = Presheaf.build(
            discrete(['p', 'q']),
            {'{}': ['*'], '{p}': ['a'], '{q}': ['b'], '{p,q}': ['s', "s'"]},
            {'{p,q}->{p}': {'s': 'a', "s'": 'a'},
             '{p,q}->{q}': {'s': 'b', "s'": 'b'},
             '{p}->{}': {'a': '*'}, '{q}->{}': {'b': '*'}})
        self.assertFalse(check_sheaf_all_covers(presheaf))
        verdict = check_sheaf(presheaf)
        self.assertFalse(verdict.is_sheaf)
        self.assertEqual(verdict.witness.target, '{p,q}')
        self.assertEqual(verdict.witness.cover, ('{p}', '{q}'))
        self.assertEqual(verdict.witness.amalgamations, ('s', "s'"))

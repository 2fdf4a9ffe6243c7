from fractions import Fraction
from unittest import TestCase

from aristo.axioms import check_divisibility_line, \
    check_point_divisibility_line, probe_subregions, is_dense_by_probing, \
    split_for_divisibility
from aristo.errors import EmptySampleRegion
from aristo.line import OpenRegion, random_regions, scale_region, \
    halving_chain, is_finite
from tests.utils import load_fixture

LINE_SWEEP_COUNT = 10 ** 3


class TestLineDivisibility(TestCase):
    def test_random_sweep_holds(self):
        samples = list(random_regions(7, LINE_SWEEP_COUNT, allow_empty=False))
        report = check_divisibility_line(samples)
        self.assertTrue(report.holds, report.note)
        self.assertEqual(len(report.witness), LINE_SWEEP_COUNT)

    def test_sweep_is_invariant_under_scaling(self):
        samples = list(random_regions(11, LINE_SWEEP_COUNT, allow_empty=False))
        for factor in (Fraction(1, 3), Fraction(5)):
            scaled = [scale_region(region, factor) for region in samples]
            report = check_divisibility_line(scaled)
            self.assertTrue(report.holds, report.note)
            for region, (label, w, v) in zip(samples, report.witness):
                low, high = region.intervals[0]
                if not (is_finite(low) and is_finite(high)):
                    continue
                left, right = split_for_divisibility(region)
                self.assertEqual(label, str(scale_region(region, factor)))
                self.assertEqual(w, str(scale_region(left, factor)))
                self.assertEqual(v, str(scale_region(right, factor)))

    def test_halving_fixture(self):
        regions = [
            OpenRegion.deserialise(serialised)
            for serialised in load_fixture('halving.json')
        ]
        report = check_divisibility_line(regions)
        self.assertTrue(report.holds)
        self.assertEqual(
            [w for _, w, _ in report.witness],
            list(map(str, regions[1:])) + ['(0, 1/16)'])

    def test_halving_chain_never_reaches_an_atom(self):
        report = check_divisibility_line(
            halving_chain(OpenRegion.parse("(0, 1)"), 30))
        self.assertTrue(report.holds)
        self.assertEqual(len(report.witness), 31)

    def test_empty_sample_is_an_error(self):
        with self.assertRaises(EmptySampleRegion):
            check_divisibility_line([OpenRegion.empty()])

    def test_points_divide_the_line(self):
        report = check_point_divisibility_line(["0", "-3/4", "100"])
        self.assertTrue(report.holds)
        self.assertEqual(
            report.witness[1], ('-3/4', '(-inf, -3/4)', '(-3/4, +inf)'))


class TestProbing(TestCase):
    def test_probes_are_inside(self):
        region = OpenRegion.parse("(-inf, 0) u (1, 2)")
        for probe in probe_subregions(region):
            self.assertEqual(len(probe.intervals), 1)
            self.assertTrue(all(point in region
                                for point in probe.sample_points()))

    def test_missing_a_piece_is_caught(self):
        outer = OpenRegion.parse("(0, 2)")
        self.assertTrue(is_dense_by_probing(
            OpenRegion.parse("(0, 1) u (1, 2)"), outer))
        self.assertFalse(is_dense_by_probing(
            OpenRegion.parse("(0, 1)"), outer))

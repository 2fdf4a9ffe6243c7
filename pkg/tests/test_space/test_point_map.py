from itertools import product
from unittest import TestCase

from aristo.errors import InvalidPointMap, NotAHomeomorphism
from aristo.space import PointMap, sierpinski, discrete, coarse, all_spaces, \
    image_is_connected


def all_maps(source, target):
    for values in product(target.points, repeat=len(source.points)):
        yield PointMap.build(source, target, dict(zip(source.points, values)))


SMALL_SPACES = all_spaces(1) + all_spaces(2)


class TestPointMap(TestCase):
    def test_identity_is_a_homeomorphism(self):
        for space in SMALL_SPACES:
            identity = PointMap.identity(space)
            self.assertEqual(identity.is_continuous(), (True, None))
            self.assertTrue(identity.is_homeomorphism())

    def test_swap_on_sierpinski_is_not_continuous(self):
        swap = PointMap.build(sierpinski(), sierpinski(), {'p': 'q', 'q': 'p'})
        self.assertEqual(swap.is_continuous(), (False, '{p}'))
        with self.assertRaises(NotAHomeomorphism):
            swap.check_homeomorphism()

    def test_maps_into_coarse_are_continuous(self):
        target = coarse(['x', 'y'])
        for space in SMALL_SPACES:
            for point_map in all_maps(space, target):
                self.assertTrue(point_map.is_continuous()[0])

    def test_maps_out_of_discrete_are_continuous(self):
        source = discrete(['p', 'q'])
        for space in SMALL_SPACES:
            for point_map in all_maps(source, space):
                self.assertTrue(point_map.is_continuous()[0])

    def test_invalid_maps(self):
        with self.assertRaises(InvalidPointMap):
            PointMap.build(sierpinski(), sierpinski(), {'p': 'p'})
        with self.assertRaises(InvalidPointMap):
            PointMap.build(
                sierpinski(), sierpinski(), {'p': 'p', 'q': 'q', 'r': 'p'})
        with self.assertRaises(InvalidPointMap):
            PointMap.build(sierpinski(), sierpinski(), {'p': 'p', 'q': 'z'})


class TestImageIsConnected(TestCase):
    def test_continuous_images_of_connected_opens_are_connected(self):
        for source, target in product(SMALL_SPACES, repeat=2):
            for point_map in all_maps(source, target):
                if not point_map.is_continuous()[0]:
                    continue
                for _open in source.opens:
                    if not source.is_connected_open(_open):
                        continue
                    self.assertTrue(image_is_connected(point_map, _open))

    def test_discontinuous_map_can_disconnect(self):
        to_discrete = PointMap.build(
            sierpinski(), discrete(['p', 'q']), {'p': 'p', 'q': 'q'})
        self.assertFalse(to_discrete.is_continuous()[0])
        self.assertFalse(image_is_connected(to_discrete, {'p', 'q'}))

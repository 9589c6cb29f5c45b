import unittest
from fractions import Fraction

import k3ut

import k3focal
from k3focal import root_data
from k3focal.root_data import DominantWeight
from k3focal.root_data import RootSystemId
from k3focal.root_data import WeightVector

dd = k3ut.dd

F = Fraction


class TestRootData(unittest.TestCase):

    def test_sizes(self):
        cases = (
            (RootSystemId.A1, 1, 1, 3),
            (RootSystemId.A2, 2, 3, 8),
            (RootSystemId.C2, 2, 4, 10),
            (RootSystemId.C3, 3, 9, 21),
            (RootSystemId.B4, 4, 16, 36),
            (RootSystemId.F4, 4, 24, 52),
        )

        for rid, rank, npos, dim in cases:
            rs = root_data.build_root_system(rid)
            dd(rid, rs.rank, len(rs.positive_roots), rs.algebra_dim)

            self.assertEqual(rank, rs.rank)
            self.assertEqual(npos, len(rs.positive_roots))
            self.assertEqual(dim, rs.algebra_dim)
            self.assertEqual(2 * npos, len(set(rs.roots)))

    def test_build_by_name(self):
        self.assertIs(root_data.build_root_system('F4'), root_data.build_root_system(RootSystemId.F4))

        for rid in RootSystemId:
            self.assertIs(root_data.build_root_system(rid.value), root_data.build_root_system(rid))

        cases = (
            'E8',
            ['F4'],
            None,
        )

        for bad in cases:
            with self.assertRaises(k3focal.InputError):
                root_data.build_root_system(bad)

    def test_fundamental_weights_dual_to_coroots(self):
        for rid in RootSystemId:
            rs = root_data.build_root_system(rid)
            for i, omega in enumerate(rs.fundamental_weights):
                for j, c in enumerate(rs.simple_coroots):
                    self.assertEqual(1 if i == j else 0, omega.dot(c), '{} w{} a{}'.format(rid, i + 1, j + 1))

    def test_f4_fundamental_weights(self):
        rs = root_data.build_root_system(RootSystemId.F4)
        expected = (
            (1, 1, 0, 0),
            (2, 1, 1, 0),
            (F(3, 2), F(1, 2), F(1, 2), F(1, 2)),
            (1, 0, 0, 0),
        )

        for e, omega in zip(expected, rs.fundamental_weights):
            self.assertEqual(WeightVector(e), omega)

        self.assertEqual(WeightVector((F(11, 2), F(5, 2), F(3, 2), F(1, 2))), rs.weyl_vector)

    def test_weyl_vector(self):
        cases = (
            (RootSystemId.A2, (1, 0, -1)),
            (RootSystemId.C3, (3, 2, 1)),
            (RootSystemId.B4, (F(7, 2), F(5, 2), F(3, 2), F(1, 2))),
        )

        for rid, expected in cases:
            rs = root_data.build_root_system(rid)
            self.assertEqual(WeightVector(expected), rs.weyl_vector)

            half_sum = sum(rs.positive_roots[1:], rs.positive_roots[0]) * F(1, 2)
            self.assertEqual(rs.weyl_vector, half_sum)

    def test_root_lengths(self):
        cases = (
            (RootSystemId.A2, {2: 6}),
            (RootSystemId.C3, {2: 12, 4: 6}),
            (RootSystemId.B4, {2: 24, 1: 8}),
            (RootSystemId.F4, {2: 24, 1: 24}),
        )

        for rid, expected in cases:
            rs = root_data.build_root_system(rid)
            got = {}
            for a in rs.roots:
                got[a.dot(a)] = got.get(a.dot(a), 0) + 1
            self.assertEqual(expected, got, rid)

    def test_roots_closed_under_reflection(self):
        for rid in RootSystemId:
            rs = root_data.build_root_system(rid)
            roots = set(rs.roots)
            for a in rs.roots:
                for b in rs.simple_roots:
                    self.assertIn(root_data.reflect(a, b), roots)

    def test_weight_of(self):
        rs = root_data.build_root_system(RootSystemId.A2)
        cases = (
            ((0, 0), (0, 0, 0)),
            ((1, 1), (1, 0, -1)),
            ((3, 0), (2, -1, -1)),
        )

        for levels, expected in cases:
            self.assertEqual(WeightVector(expected), root_data.weight_of(rs, DominantWeight(levels)))

        with self.assertRaises(k3focal.InputError):
            root_data.weight_of(rs, DominantWeight.of(1, 0, 0))

    def test_inner_product(self):
        rs = root_data.build_root_system(RootSystemId.C3)
        self.assertEqual(F(3), root_data.inner_product(rs, (1, 1, 1), (1, 1, 1)))

        with self.assertRaises(k3focal.InputError):
            root_data.inner_product(rs, (1, 1), (1, 1, 1))

    def test_dominant_weight(self):
        self.assertEqual('0', str(DominantWeight.zero(3)))
        self.assertEqual('w1+2w3', str(DominantWeight.of(1, 0, 2)))
        self.assertTrue(DominantWeight.zero(2).is_zero())
        self.assertLess(DominantWeight.of(0, 3), DominantWeight.of(1, 1))

        for bad in ((-1, 0), (F(1, 2), 0), (True, 0)):
            with self.assertRaises(k3focal.InputError):
                DominantWeight(bad)

    def test_weight_vector(self):
        v = WeightVector((1, F(1, 2)))
        w = WeightVector((0, 2))

        self.assertEqual(WeightVector((1, F(5, 2))), v + w)
        self.assertEqual(WeightVector((-1, F(-1, 2))), -v)
        self.assertEqual(WeightVector((2, 1)), v * 2)
        self.assertEqual(F(1), v.dot(w))

        with self.assertRaises(k3focal.InputError):
            v + WeightVector((1, 2, 3))

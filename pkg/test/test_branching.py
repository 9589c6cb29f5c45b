import collections
import unittest
from fractions import Fraction
from unittest import mock

import k3ut

import k3focal
from k3focal import branching
from k3focal import normalization
from k3focal import rep_core
from k3focal import root_data
from k3focal.branching import KIrrepLabel
from k3focal.root_data import DominantWeight

dd = k3ut.dd

F = Fraction

W = DominantWeight.of


def space(name):
    return normalization.focal_space(name)


def dual_label(s, label):
    # highest weight of the dual is the dominant conjugate of minus the highest weight
    def dual(alg, dw):
        k = root_data.build_root_system(alg)
        lowest = -root_data.weight_of(k, dw)
        return rep_core.dominant_weight_from_vector(k, rep_core.dominant_conjugate(k, lowest))

    extra = label.extra_part
    if len(s.k_factors) > 1:
        f = s.k_factors[1]
        extra = -extra if f.is_circle else dual(f.alg, W(extra)).levels[0]
    return KIrrepLabel(dual(s.k_factors[0].alg, label.semisimple_part), extra)


class TestEmbedding(unittest.TestCase):

    def test_check_embedding(self):
        for s in normalization.all_focal_spaces():
            branching.check_embedding(s)

    def test_bad_embedding(self):
        s = space('hp2')
        bad = {s.id: (branching._frac_rows([[F(1, 2), 0, 0], [0, 1, 0]]),
                      branching._frac_rows([[0, 0, F(1, 2)], [0, 0, F(-1, 2)]]))}

        with mock.patch.dict(branching._blocks, bad):
            with self.assertRaises(k3focal.ConfigurationError):
                branching.check_embedding(s)

    def test_cp2_adjoint_restriction(self):
        s = space('cp2')
        g = root_data.build_root_system(s.g_alg)
        restricted = branching.restrict_weights(s, rep_core.weight_system(g, W(1, 1)))
        dd(restricted)

        self.assertEqual(8, sum(restricted.values()))
        # su(2) adjoint at charge 0, plus the zero weight of the center
        self.assertEqual(1, restricted[((1, -1), (0,))])
        self.assertEqual(2, restricted[((0, 0), (0,))])
        self.assertEqual(1, restricted[((-1, 1), (0,))])

    def test_hp2_projection(self):
        emb = branching.torus_embedding(space('hp2'))
        self.assertEqual(((1, 1), (0, 0)), emb.restrict((1, 1, 0)))
        self.assertEqual(((0, 0), (F(1, 2), F(-1, 2))), emb.restrict((0, 0, 1)))
        self.assertIsNone(emb.center_charge)

    def test_center_charge(self):
        emb = branching.torus_embedding(space('cp2'))
        self.assertEqual((1, 1, 0), emb.center_charge)
        self.assertEqual(((F(1, 2), F(-1, 2), 0), (F(-1, 2), F(1, 2), 0)), emb.matrix)

    def test_op2_26(self):
        # V_w4 of F4 restricts to R^9 + spinor + trivial of Spin(9)
        s = space('op2')
        g = root_data.build_root_system(s.g_alg)
        k = root_data.build_root_system(s.isotropy_alg)

        restricted = branching.restrict_weights(s, rep_core.weight_system(g, W(0, 0, 0, 1)))

        expected = collections.Counter()
        for dw in (W(1, 0, 0, 0), W(0, 0, 0, 1), W(0, 0, 0, 0)):
            for mu, m in rep_core.weight_system(k, dw).entries.items():
                expected[(tuple(mu),)] += m

        self.assertEqual(expected, restricted)


class TestBranch(unittest.TestCase):

    def test_dimension_bookkeeping(self):
        cases = (
            ('cp2', W(2, 1)),
            ('cp2', W(3, 0)),
            ('hp2', W(1, 0, 1)),
            ('hp2', W(0, 2, 0)),
            ('op2', W(1, 0, 0, 0)),
            ('op2', W(0, 0, 1, 0)),
        )

        for name, dw in cases:
            s = space(name)
            g = root_data.build_root_system(s.g_alg)
            res = branching.branch(s, dw)
            dd(name, dw, res.constituents)

            total = sum(m * branching.k_dimension(s, label) for label, m in res.constituents.items())
            self.assertEqual(rep_core.weyl_dimension(g, dw), total)
            self.assertTrue(all(m > 0 for m in res.constituents.values()))

    def test_roundtrip(self):
        # the constituents' weight systems add up to the restricted multiset
        cases = (
            ('cp2', W(1, 2)),
            ('hp2', W(0, 1, 0)),
            ('op2', W(0, 0, 0, 1)),
        )

        for name, dw in cases:
            s = space(name)
            g = root_data.build_root_system(s.g_alg)
            restricted = branching.restrict_weights(s, rep_core.weight_system(g, dw))

            union = collections.Counter()
            for label, m in branching.branch(s, dw).constituents.items():
                for w, x in branching._k_weight_system(s, label, None).items():
                    union[w] += m * x

            self.assertEqual(restricted, union)

    def test_hp2_w2(self):
        s = space('hp2')
        res = branching.branch(s, W(0, 1, 0))

        expected = {
            KIrrepLabel(W(0, 1), 0): 1,
            KIrrepLabel(W(1, 0), 1): 1,
            KIrrepLabel(W(0, 0), 0): 1,
        }
        self.assertEqual(expected, res.constituents)

    def test_op2_adjoint(self):
        s = space('op2')
        res = branching.branch(s, W(1, 0, 0, 0))

        expected = {
            KIrrepLabel(W(0, 1, 0, 0)): 1,
            KIrrepLabel(W(0, 0, 0, 1)): 1,
        }
        self.assertEqual(expected, res.constituents)

    def test_trivial(self):
        for s in normalization.all_focal_spaces():
            g = root_data.build_root_system(s.g_alg)
            res = branching.branch(s, DominantWeight.zero(g.rank))
            self.assertEqual({branching.trivial_label(s): 1}, res.constituents)

    def test_labels(self):
        cases = (
            ('cp2', KIrrepLabel(W(2), F(0)), KIrrepLabel(W(0), F(0))),
            ('hp2', KIrrepLabel(W(0, 1), 0), KIrrepLabel(W(0, 0), 0)),
            ('op2', KIrrepLabel(W(1, 0, 0, 0)), KIrrepLabel(W(0, 0, 0, 0))),
        )

        for name, sl, tl in cases:
            s = space(name)
            self.assertEqual(sl, branching.slice_label(s))
            self.assertEqual(tl, branching.trivial_label(s))
            self.assertEqual(normalization.normal_rank(s), branching.k_dimension(s, sl))

    def test_guard(self):
        with self.assertRaises(k3focal.ResourceError):
            branching.branch(space('op2'), W(0, 0, 1, 0), dim_guard=200)


class TestMultiplicity(unittest.TestCase):

    def test_slice_multiplicity(self):
        cases = (
            ('cp2', W(0, 0), 0),
            ('cp2', W(1, 1), 1),
            ('cp2', W(3, 0), 1),
            ('cp2', W(0, 3), 1),
            ('cp2', W(2, 1), 0),
            ('cp2', W(1, 0), 0),
            ('hp2', W(0, 0, 0), 0),
            ('hp2', W(0, 1, 0), 1),
            ('hp2', W(1, 0, 1), 1),
            ('hp2', W(2, 0, 0), 0),
            ('hp2', W(0, 0, 1), 0),
            ('op2', W(0, 0, 0, 0), 0),
            ('op2', W(0, 0, 0, 1), 1),
            ('op2', W(1, 0, 0, 0), 0),
            ('op2', W(0, 0, 1, 0), 1),
        )

        for name, dw, expected in cases:
            got = branching.slice_multiplicity(space(name), dw)
            dd(name, dw, got)
            self.assertEqual(expected, got, '{} {}'.format(name, dw))

    def test_spherical_multiplicity(self):
        cases = (
            ('cp2', W(0, 0), 1),
            ('cp2', W(1, 1), 1),
            ('cp2', W(1, 0), 0),
            ('hp2', W(0, 1, 0), 1),
            ('hp2', W(0, 0, 0), 1),
            ('op2', W(0, 0, 0, 1), 1),
            ('op2', W(0, 0, 0, 0), 1),
        )

        for name, dw, expected in cases:
            self.assertEqual(expected, branching.spherical_multiplicity(space(name), dw))

    def test_dual_symmetry(self):
        # su(3) conjugation swaps w1 and w2 and negates the charge
        s = space('cp2')
        for a, b in ((1, 0), (2, 1), (3, 0), (2, 2)):
            x = branching.branch(s, W(a, b)).constituents
            y = branching.branch(s, W(b, a)).constituents
            flipped = {dual_label(s, l): m for l, m in y.items()}
            self.assertEqual(x, flipped)

    def test_self_dual(self):
        # sp(3) and f4 representations are self-dual, and so is their restriction
        cases = (
            ('hp2', W(0, 1, 0)),
            ('hp2', W(1, 1, 1)),
            ('hp2', W(0, 2, 0)),
            ('hp2', W(1, 0, 0)),
            ('op2', W(0, 0, 0, 1)),
            ('op2', W(0, 0, 1, 0)),
            ('op2', W(1, 0, 0, 0)),
        )

        for name, dw in cases:
            s = space(name)
            g = root_data.build_root_system(s.g_alg)

            restricted = branching.restrict_weights(s, rep_core.weight_system(g, dw))
            negated = collections.Counter(
                {tuple(tuple(-x for x in part) for part in w): m for w, m in restricted.items()})
            self.assertEqual(restricted, negated, '{} {}'.format(name, dw))

            constituents = branching.branch(s, dw).constituents
            dd(name, dw, {str(l): m for l, m in constituents.items()})
            for label, m in constituents.items():
                dual = dual_label(s, label)
                self.assertEqual(label, dual)
                self.assertEqual(m, constituents.get(dual, 0))

from reekit import ree
from reekit.ree import INF, O, SylowParams, GroupElement, matmul
from reekit.field import make_field
from reekit.util import GroupError
import numpy as np
import unittest

def _same(A, B):
    return (A.view(np.ndarray) == B.view(np.ndarray)).all(axis=(-2, -1))

class TestSylowLaws(unittest.TestCase):

    def setUp(self):
        self.F = make_field(1)
        self.rng = np.random.default_rng(7)

    def sample(self, n=200):
        F = self.F
        return F.random(self.rng, n), F.random(self.rng, n), F.random(self.rng, n)

    def test_mult_law_both_sides(self):
        F = self.F
        for side in (INF, O):
            s = SylowParams(*(self.sample() + (side,)))
            t = SylowParams(*(self.sample() + (side,)))
            c = ree.mult_law(F, s, t)
            prod = matmul(ree.sylow_matrices(F, s.a, s.a1, s.a2, side),
                          ree.sylow_matrices(F, t.a, t.a1, t.a2, side))
            self.assertTrue(_same(prod, ree.sylow_matrices(F, c.a, c.a1, c.a2, side)).all())

    def test_inverse_law(self):
        F = self.F
        s = SylowParams(*(self.sample() + (INF,)))
        i = ree.inverse_law_inf(F, s)
        prod = matmul(ree.sylow_matrices(F, s.a, s.a1, s.a2), ree.sylow_matrices(F, i.a, i.a1, i.a2))
        self.assertTrue(ree.is_identity(prod).all())

    def test_sides_do_not_mix(self):
        F = self.F
        s = ree.params(F, 1, 0, 0, INF)
        t = ree.params(F, 1, 0, 0, O)
        with self.assertRaises(GroupError):
            ree.mult_law(F, s, t)
        with self.assertRaises(GroupError):
            ree.inverse_law_inf(F, t)

    def test_swap_conjugates_templates(self):
        F = self.F
        W = ree.swap_matrix(F)
        self.assertEqual(W.det(), F.one)
        a, a1, a2 = self.sample(50)
        for k in range(50):
            x = ree.u_inf(F, a[k], a1[k], a2[k])
            self.assertEqual(W * x * W.inverse(), ree.u_O(F, a[k], a1[k], a2[k]))

    def test_determinant_one(self):
        F = self.F
        a, a1, a2 = self.sample(10)
        for k in range(10):
            self.assertEqual(ree.u_inf(F, a[k], a1[k], a2[k]).det(), F.one)
            self.assertEqual(ree.u_O(F, a[k], a1[k], a2[k]).det(), F.one)


class TestSpecialElements(unittest.TestCase):

    def setUp(self):
        self.F = make_field(1)

    def test_h_minus1(self):
        F = self.F
        h = ree.h_minus1(F)
        self.assertEqual(h.det(), F.one)
        self.assertEqual(h.order(), 2)
        self.assertEqual(h.trace(), F.minus_one)
        self.assertEqual(h, ree.torus(F, -1))

    def test_torus(self):
        F = self.F
        t = F.generator
        h = ree.torus(F, t)
        self.assertEqual(h.det(), F.one)
        self.assertEqual(h.order(), 26)
        self.assertEqual(h * ree.torus(F, F.one / t), GroupElement.identity(F))
        with self.assertRaises(GroupError):
            ree.torus(F, 0)

    def test_torus_conjugation(self):
        F = self.F
        t = F.generator
        h = ree.torus(F, t)
        a, a1, a2 = F.from_string('120'), F.from_string('011'), F.from_string('202')
        w = F.theta(t) * t
        self.assertEqual(ree.conjugate(ree.u_inf(F, a, a1, a2), h),
                         ree.u_inf(F, t*a, w*a1, w*t*a2))

    def test_class_reps(self):
        F = self.F
        for k in (9, 3, 6):
            for g in ree.class_reps(F, k):
                self.assertEqual(g.order(), k)
        with self.assertRaises(GroupError):
            ree.class_reps(F, 7)
        reps = ree.order_class_reps(F)
        self.assertEqual(sorted(reps), [1, 2, 3, 6, 9])
        self.assertEqual([len(reps[k]) for k, n in ree.CLASS_ORDERS], [n for k, n in ree.CLASS_ORDERS])

    def test_unipotent_traces(self):
        F = self.F
        for g in ree.class_reps(F, 9) + ree.class_reps(F, 3):
            self.assertEqual(g.trace(), F.one)

    def test_commutator_in_derived_subgroup(self):
        F = self.F
        x = ree.u_inf(F, 1, 0, 0)
        y = ree.u_inf(F, F.generator, 1, 0)
        c = ree.commutator(x, y)
        # entry (0,6) of the inf template is a
        self.assertEqual(c.m[0, 6], F.zero)


class TestGroupElement(unittest.TestCase):

    def setUp(self):
        self.F = make_field(0)

    def test_text(self):
        F = self.F
        g = ree.u_inf(F, 1, 2, 1) * ree.u_O(F, 0, 1, 1)
        self.assertEqual(GroupElement.from_text(F, g.text()), g)
        self.assertEqual(len(g.text().split(';')), 7)

    def test_from_text_errors(self):
        F = self.F
        eye = ';'.join(' '.join('1' if i == j else '0' for j in range(7)) for i in range(7))
        self.assertTrue(GroupElement.from_text(F, eye).is_identity())
        with self.assertRaises(GroupError):
            GroupElement.from_text(F, '1 0;0 1')
        neg = eye.replace('1', '2', 1)
        with self.assertRaises(GroupError):
            GroupElement.from_text(F, neg)
        with self.assertRaises(GroupError):
            GroupElement.from_text(F, eye.replace('1', '7', 1))

    def test_powers(self):
        F = self.F
        g = ree.u_inf(F, 1, 0, 0)
        self.assertEqual(g.order(), 9)
        self.assertEqual(g ** 9, g.identity_like())
        self.assertEqual(g ** -1, g.inverse())
        self.assertEqual(g ** 3, ree.u_inf(F, 0, 0, -1))

    def test_mixed_fields(self):
        with self.assertRaises(GroupError):
            ree.u_inf(self.F, 1, 0, 0) * ree.u_inf(make_field(1), 1, 0, 0)

    def test_random_elements_in_group(self):
        F = make_field(1)
        X = ree.random_matrices(F, np.random.default_rng(3), 50)
        orders = ree.orders(F, X)
        self.assertTrue(set(orders.tolist()) <= {1, 2, 3, 6, 7, 9, 13, 14, 19, 26, 37})

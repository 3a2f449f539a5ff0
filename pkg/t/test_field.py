from reekit.field import make_field, field_for_q, group_order, stated_group_order, \
    order_cap, sqrt3q
from reekit.util import FieldError
import numpy as np
import unittest

class TestField(unittest.TestCase):

    def setUp(self):
        self.f3 = make_field(0)
        self.f27 = make_field(1)

    def test_orders(self):
        self.assertEqual(self.f3.q, 3)
        self.assertEqual(self.f27.q, 27)
        self.assertEqual(make_field(2).q, 243)
        self.assertIs(field_for_q(27), self.f27)
        with self.assertRaises(FieldError):
            field_for_q(9)
        with self.assertRaises(FieldError):
            make_field(-1)

    def test_modulus(self):
        self.assertEqual(str(self.f27.modulus), 'x^3 + 2x + 1')

    def test_theta_squares_to_frobenius(self):
        F = self.f27
        x = F.elements()
        self.assertTrue(np.array_equal(F.theta(F.theta(x)), x ** 3))
        self.assertEqual(F.theta_exponent, 9)

    def test_theta_trivial_at_3(self):
        x = self.f3.elements()
        self.assertTrue(np.array_equal(self.f3.theta(x), x))
        self.assertIn('identity', self.f3.describe()[2])

    def test_strings(self):
        F = self.f27
        self.assertEqual(F.to_string(F.generator), '010')
        self.assertEqual(F.from_string('010'), F.generator)
        self.assertEqual(F.from_string('-010'), -F.generator)
        self.assertEqual(F.coeffs(F.from_string('201')), (2, 0, 1))
        for bad in ('01', '0120', '01x'):
            with self.assertRaises(FieldError):
                F.from_string(bad)

    def test_inverse(self):
        F = self.f27
        x = F.nonzero()
        self.assertTrue(np.all(x * F.inv(x) == F.one))
        with self.assertRaises(FieldError):
            F.inv(F.zero)
        with self.assertRaises(FieldError):
            F.pow(0, -1)

    def test_foreign_operands(self):
        with self.assertRaises(FieldError):
            self.f3.element(self.f27.one)
        with self.assertRaises(FieldError):
            self.f3.element(3)
        with self.assertRaises(FieldError):
            self.f3.element(1.5)

    def test_group_orders(self):
        self.assertEqual(group_order(self.f3), 1512)
        self.assertEqual(stated_group_order(self.f3), 216)
        self.assertEqual(group_order(self.f27), 27**3 * (27**3 + 1) * 26)
        self.assertEqual(sqrt3q(self.f27), 9)
        self.assertEqual(order_cap(self.f27), 74)

    def test_random_is_seeded(self):
        F = self.f27
        a = F.random(np.random.default_rng(5), 20)
        b = F.random(np.random.default_rng(5), 20)
        self.assertTrue(np.array_equal(a, b))
        self.assertTrue(np.all(F.random_nonzero(np.random.default_rng(1), 100) != 0))

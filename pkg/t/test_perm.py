from reekit.perm import Perm, closure, named_group, generates, is_redundant, \
    cyclic_reduce, cyclic_group, orbit, load_generators, generates_ree
from reekit.field import make_field
from reekit.util import ReekitException, ClosureCapExceeded, NotCyclic
from reekit import ree
import numpy as np
import os
import tempfile
import unittest

class TestPerm(unittest.TestCase):

    def test_composition(self):
        g = Perm([1, 2, 0, 3])
        h = Perm([0, 1, 3, 2])
        for i in range(4):
            self.assertEqual((g * h)(i), g(h(i)))
        self.assertTrue((g * g.inverse()).is_identity())
        self.assertEqual(g.order(), 3)
        self.assertEqual(repr(g * h), '(0 1 2 3)')

    def test_bad_perm(self):
        with self.assertRaises(ReekitException):
            Perm([0, 0, 1])
        with self.assertRaises(ReekitException):
            Perm([1, 0]) * Perm([0, 1, 2])


class TestClosure(unittest.TestCase):

    def test_named_orders(self):
        for name, order in (('a5', 60), ('psl27', 168), ('psl28', 504)):
            self.assertEqual(closure(named_group(name)).order, order)
        with self.assertRaises(ReekitException):
            named_group('m11')

    def test_ree3_order(self):
        ctx = closure(named_group('ree3'))
        self.assertEqual(ctx.order, 1512)
        self.assertTrue(generates_ree(make_field(0), ree.generators(make_field(0))))

    def test_cap(self):
        with self.assertRaises(ClosureCapExceeded):
            closure(named_group('a5'), cap=10)

    def test_tables(self):
        ctx = closure(named_group('a5'))
        E = ctx.elements
        for i, j in ((3, 7), (10, 59), (41, 2)):
            self.assertEqual(E[int(ctx.mul[i, j])], E[i] * E[j])
        self.assertTrue((ctx.mul[np.arange(60), ctx.inv] == ctx.identity).all())
        self.assertEqual(sorted(set(ctx.orders.tolist())), [1, 2, 3, 5])
        self.assertEqual(ctx.power(1, 5), ctx.identity)

    def test_generation(self):
        ctx = closure(named_group('a5'))
        self.assertTrue(generates([1, 2], ctx))
        self.assertFalse(generates([1], ctx))
        self.assertTrue(is_redundant([1, 2, 0], ctx))
        self.assertFalse(is_redundant([1, 2], ctx))

    def test_tuple_spans(self):
        ctx = closure(named_group('a5'))
        T = np.random.default_rng(3).integers(0, 60, (200, 3))
        spans = ctx.tuple_spans(T) == ctx.full
        want = [generates(row, ctx) for row in T.tolist()]
        self.assertEqual(spans.tolist(), want)


class TestCyclic(unittest.TestCase):

    def test_cyclic_reduce(self):
        ctx = cyclic_group(6)
        x = int(np.flatnonzero(ctx.orders == 2)[0])
        y = int(np.flatnonzero(ctx.orders == 3)[0])
        m, = cyclic_reduce([x, y], ctx)
        self.assertEqual(ctx.orders[ctx.mul[ctx.power(x, m), y]], 6)
        self.assertEqual(cyclic_reduce([x], ctx), [])

    def test_not_cyclic(self):
        ctx = closure(named_group('a5'))
        with self.assertRaises(NotCyclic):
            cyclic_reduce([1, 2], ctx)


class TestOrbitAndFiles(unittest.TestCase):

    def test_orbit(self):
        self.assertEqual(orbit(0, [Perm([1, 0, 2, 3]), Perm([0, 1, 3, 2])]), set([0, 1]))
        self.assertEqual(orbit(0, named_group('psl27')), set(range(8)))

    def test_load_generators(self):
        fd, path = tempfile.mkstemp()
        try:
            with os.fdopen(fd, 'w') as f:
                f.write('# a5\n1 2 3 4 0\n1,2,0,3,4  # 3-cycle\n\n')
            gens = load_generators(path)
            self.assertEqual(gens, named_group('a5'))
            with open(path, 'w') as f:
                f.write('1 2 0\n1 0\n')
            with self.assertRaises(ReekitException):
                load_generators(path)
        finally:
            os.unlink(path)

from reekit.nielsen import NielsenMove, move_text, check_move, apply_move, \
    inverse_move, all_moves, neighbors, bfs_census, pra_walk, random_generating_tuple, \
    order_histogram
from reekit.perm import closure, named_group, generates
from reekit.field import make_field, group_order
from reekit.unital import Unital
from reekit.util import MoveError, CensusTooLarge, seeded_rng
import numpy as np
import unittest

class TestMoves(unittest.TestCase):

    def setUp(self):
        self.ctx = closure(named_group('a5'))
        self.rng = seeded_rng(9, self.id())

    def random_tuple(self, n=3):
        return tuple(int(x) for x in self.rng.integers(0, self.ctx.order, n))

    def test_text(self):
        self.assertEqual(move_text(NielsenMove('R', 0, 1, 1)), 'R+1,2')
        self.assertEqual(move_text(NielsenMove('L', 2, 0, -1)), 'L-3,1')
        self.assertEqual(move_text(NielsenMove('P', 0, 2, 0)), 'P1,3')
        self.assertEqual(move_text(NielsenMove('I', 1, 1, 0)), 'I2')

    def test_bad_moves(self):
        for m in (NielsenMove('R', 0, 0, 1), NielsenMove('R', 0, 3, 1),
                  NielsenMove('X', 0, 1, 1), NielsenMove('L', 0, 1, 2),
                  NielsenMove('I', 3, 3, 0)):
            with self.assertRaises(MoveError):
                check_move(m, 3)

    def test_inverses(self):
        moves = all_moves(3)
        self.assertEqual(len(moves), 30)
        for k in range(10000):
            t = self.random_tuple()
            m = moves[int(self.rng.integers(len(moves)))]
            self.assertEqual(apply_move(apply_move(t, m, self.ctx), inverse_move(m), self.ctx), t)

    def test_moves_keep_subgroup(self):
        ctx = self.ctx
        moves = all_moves(3)
        for k in range(1000):
            t = self.random_tuple()
            m = moves[int(self.rng.integers(len(moves)))]
            self.assertTrue((ctx.span_mask(t) == ctx.span_mask(apply_move(t, m, ctx))).all())

    def test_neighbors(self):
        t = self.random_tuple()
        nb = neighbors(t, self.ctx)
        self.assertLessEqual(len(nb), 30)
        self.assertEqual(len(set(nb)), len(nb))

    def test_objects(self):
        g = named_group('a5')
        t = apply_move((g[0], g[1]), NielsenMove('L', 0, 1, -1))
        self.assertEqual(t, (g[1].inverse() * g[0], g[1]))


class TestCensus(unittest.TestCase):

    def test_a5_pairs(self):
        r = bfs_census(closure(named_group('a5')), 2, 'a5')
        self.assertEqual(r['generating_tuples'], 2280)
        self.assertEqual(sum(r['components']), 2280)

    def test_a5_triples(self):
        r = bfs_census(closure(named_group('a5')), 3, 'a5')
        self.assertEqual(len(r['components']), 1)
        self.assertEqual(r['components'][0], r['generating_tuples'])
        self.assertTrue(r['every_component_has_redundant'])

    def test_psl27_triples(self):
        r = bfs_census(closure(named_group('psl27')), 3, 'psl27')
        self.assertEqual(len(r['components']), 1)
        self.assertEqual(r['components'][0], r['generating_tuples'])
        self.assertTrue(r['every_component_has_redundant'])

    def test_too_large(self):
        with self.assertRaises(CensusTooLarge):
            bfs_census(closure(named_group('psl28')), 4, 'psl28')
        with self.assertRaises(MoveError):
            bfs_census(closure(named_group('a5')), 1)


class TestPra(unittest.TestCase):

    def test_walk_keeps_generation(self):
        ctx = closure(named_group('a5'))
        t, x = pra_walk((1, 2, 0), 50, seed=4, ctx=ctx)
        self.assertTrue(generates(t, ctx))
        self.assertIn(x, t)
        self.assertEqual(pra_walk((1, 2, 0), 50, seed=4, ctx=ctx), (t, x))

    def test_short_tuple(self):
        with self.assertRaises(MoveError):
            pra_walk((1,), 5)

    def test_ree_matrices(self):
        F = make_field(0)
        rng = np.random.default_rng(2)
        t = random_generating_tuple(F, 3, rng)
        s, x = pra_walk(t, 20, seed=1)
        self.assertEqual(len(s), 3)
        self.assertTrue(x.order() in (1, 2, 3, 6, 7, 9))

    def test_ree27_histogram(self):
        F = make_field(1)
        rng = seeded_rng(5, 'pra27')
        t = random_generating_tuple(F, 3, rng, unital=Unital(F))
        outs = []
        for k in range(40):
            t, x = pra_walk(t, 10, rng=rng)
            outs.append(x)
        hist = order_histogram(outs)
        self.assertEqual(sum(hist.values()), 40)
        self.assertGreaterEqual(len(hist), 5)
        for k in hist:
            self.assertEqual(group_order(F) % k, 0)

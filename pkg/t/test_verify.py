from reekit import verify
from reekit.verify import CheckReport, run_check, run_checks, check_names, \
    expected_fixed_points, PASS, FAIL, DISCREPANCY
from reekit.util import ReekitException
import json
import unittest

class TestReport(unittest.TestCase):

    def test_modes(self):
        self.assertEqual(CheckReport('x', 3).mode, 'EXHAUSTIVE')
        self.assertEqual(CheckReport('x', 27, 100, 42).mode, 'SAMPLED(100, 42)')

    def test_verdicts(self):
        r = CheckReport('x', 27)
        self.assertEqual(r.verdict, PASS)
        r.discrepancy({'a': 1})
        self.assertEqual(r.verdict, DISCREPANCY)
        r.fail({'a': 2})
        r.discrepancy({'a': 3})
        self.assertEqual(r.verdict, FAIL)
        self.assertEqual(len(r.counterexamples), 3)

    def test_degenerate(self):
        r3, r27 = CheckReport('x', 3), CheckReport('x', 27)
        r3.degenerate({})
        r27.degenerate({})
        self.assertEqual(r3.verdict, DISCREPANCY)
        self.assertEqual(r27.verdict, FAIL)

    def test_witness_cap(self):
        r = CheckReport('x', 27)
        for k in range(25):
            r.fail({'k': k})
        self.assertEqual(len(r.counterexamples), verify.MAX_WITNESSES)

    def test_json(self):
        r = CheckReport('x', 3)
        r.stats['n'] = 4
        doc = json.loads(r.to_json())
        self.assertEqual(sorted(doc), ['counterexamples', 'mode', 'name', 'notes',
                                       'q', 'stats', 'verdict'])
        self.assertEqual(doc['stats'], {'n': 4})


class TestExpectedFixedPoints(unittest.TestCase):

    def test_q27(self):
        self.assertEqual(expected_fixed_points(27, 2), 28)
        for k in (3, 6, 9):
            self.assertEqual(expected_fixed_points(27, k), 1)
        for k in (13, 26):
            self.assertEqual(expected_fixed_points(27, k), 2)
        for k in (7, 14, 19, 37):
            self.assertEqual(expected_fixed_points(27, k), 0)
        self.assertIsNone(expected_fixed_points(27, 4))


class TestRegistry(unittest.TestCase):

    def test_names(self):
        self.assertIn('hall', check_names(27))
        self.assertNotIn('hall', check_names(3))
        self.assertEqual(check_names(3), sorted(check_names(3)))

    def test_errors(self):
        with self.assertRaises(ReekitException):
            run_check('nosuch', 3)
        with self.assertRaises(ReekitException):
            run_check('hall', 3)
        with self.assertRaises(ReekitException):
            run_checks(3, ['order', 'hall'])

    def test_threads_keep_order(self):
        reports = run_checks(3, ['order', 'coincidence', 'torus'], threads=2)
        self.assertEqual([r.name for r in reports], ['coincidence', 'order', 'torus'])


class TestChecks3(unittest.TestCase):

    def test_group_order(self):
        r = run_check('order', 3)
        self.assertEqual(r.stats['computed'], 1512)
        self.assertEqual(r.verdict, DISCREPANCY)
        self.assertEqual(r.counterexamples[0]['stated'], 216)

    def test_torus(self):
        self.assertEqual(run_check('torus', 3).verdict, PASS)

    def test_coincidence(self):
        r = run_check('coincidence', 3)
        self.assertEqual(r.verdict, DISCREPANCY)
        self.assertEqual(r.stats['coinciding_pairs'], 2)
        self.assertEqual(r.stats['relation_pairs'], 4)

    def test_star_formulas(self):
        r = run_check('star', 3)
        for name in ('order9+1', 'order9-1', 'order3_b1+1', 'order3_b1-1',
                     'order3_b0+1', 'order3_b0-1'):
            self.assertEqual(r.stats[name], 0)
        for name in ('order6+1', 'order6-1', 'order6_group+1', 'order6_group-1',
                     'order6_difference'):
            self.assertGreater(r.stats[name], 0)
        self.assertEqual(r.verdict, DISCREPANCY)
        for w in r.counterexamples:
            self.assertTrue(w['formula'].startswith('order6'))
            self.assertNotEqual(w['computed'], w['stated'])
        # eta (0,0,1)_O has trace 1, the order 6 formula gives 1+d^2
        w = [w for w in r.counterexamples if w['formula'] == 'order6+1'][0]
        self.assertEqual((w['b'], w['c'], w['d'], w['computed'], w['stated']),
                         ('0', '0', '1', '0', '2'))

    def test_sylow(self):
        r = run_check('sylow', 3)
        self.assertEqual(r.verdict, PASS)
        self.assertEqual(r.stats['images_of_O'], 27)

    def test_trace(self):
        r = run_check('trace', 3)
        self.assertEqual(r.verdict, PASS)
        self.assertGreater(r.stats['P_inf_order_9'], 0)
        self.assertGreater(r.stats['group_order_2'], 0)

    def test_orderfix(self):
        r = run_check('orderfix', 3)
        self.assertNotEqual(r.verdict, FAIL)
        self.assertEqual(r.stats['2'], [4])

    def test_action_of_P(self):
        r = run_check('actionP', 3)
        self.assertEqual(r.verdict, DISCREPANCY)
        self.assertEqual(r.stats['stabilised_blocks_noncentral'], [3])
        self.assertEqual(r.counterexamples[-1]['computed'], 3)
        self.assertEqual(r.counterexamples[-1]['stated'], 9)

    def test_imprimitivity(self):
        r = run_check('imprimitivity', 3)
        self.assertEqual(r.verdict, PASS)
        self.assertEqual(r.stats['classes'], 3)

    def test_noblocks(self):
        r = run_check('noblocks', 3)
        self.assertEqual(r.verdict, PASS)
        self.assertGreater(r.stats['two_point_elements'], 0)

    def test_noncentral3(self):
        r = run_check('noncentral3', 3)
        self.assertNotEqual(r.verdict, FAIL)
        self.assertEqual(r.verdict, DISCREPANCY)
        w = [w for w in r.counterexamples if 'statement' in w][0]
        self.assertEqual((w["b'"], w['computed'], w['stated']), ('0', '2', '1'))

    def test_noncentral3_meet(self):
        r = run_check('noncentral3meet', 3)
        self.assertNotEqual(r.verdict, FAIL)
        self.assertEqual(r.stats['pairs'], 4)

    def test_centralisers(self):
        r = run_check('centralisers', 3)
        self.assertNotEqual(r.verdict, FAIL)
        orders = r.stats['centraliser_orders']
        self.assertEqual(orders['1'], [1512])
        for name in ('Z(P) centralises P', '[P,P] is abelian', 'the torus is abelian'):
            self.assertEqual(r.stats[name], 0)

    def test_design(self):
        r = run_check('design', 3)
        self.assertEqual(r.verdict, PASS)
        self.assertEqual(r.stats['blocks'], 63)
        self.assertEqual(r.stats['involutions'], 63)
        self.assertEqual(r.stats['pairs'], 378)

    def test_laws(self):
        r = run_check('laws', 3)
        self.assertEqual(r.verdict, PASS)
        self.assertEqual(r.mode, 'EXHAUSTIVE')


class TestChecks27(unittest.TestCase):

    def test_group_order(self):
        r = run_check('order', 27)
        self.assertEqual(r.stats['computed'], 27**3 * (27**3 + 1) * 26)
        self.assertEqual(r.verdict, DISCREPANCY)

    def test_coincidence(self):
        r = run_check('coincidence', 27)
        self.assertEqual(r.verdict, DISCREPANCY)
        self.assertEqual(r.stats['coinciding_pairs'], 26)
        self.assertEqual(r.stats['relation_pairs'], 52)

    def test_torus_printed_map(self):
        r = run_check('torus', 27)
        self.assertEqual(r.verdict, DISCREPANCY)
        self.assertGreater(r.stats['printed_map_breaks_blocks'], 0)

    def test_laws_sampled(self):
        r = run_check('laws', 27, samples=500, seed=3)
        self.assertEqual(r.verdict, PASS)
        self.assertEqual(r.mode, 'SAMPLED(500, 3)')

    def test_star_sampled(self):
        r = run_check('star', 27, samples=500, seed=3)
        for name in ('order9+1', 'order9-1', 'order3_b1+1', 'order3_b1-1',
                     'order3_b0+1', 'order3_b0-1'):
            self.assertEqual(r.stats[name], 0)
        for name in ('order6+1', 'order6-1', 'order6_group+1', 'order6_group-1',
                     'order6_difference'):
            self.assertGreater(r.stats[name], 0)
        self.assertEqual(r.verdict, DISCREPANCY)
        self.assertEqual(r.mode, 'SAMPLED(500, 3)')

    def test_action_of_P_sampled(self):
        r = run_check('actionP', 27, samples=5, seed=1)
        self.assertEqual(r.verdict, DISCREPANCY)
        self.assertEqual(r.stats['stabilised_blocks_noncentral'], [27])
        w = r.counterexamples[-1]
        self.assertEqual((w['computed'], w['stated']), (27, 729))

    def test_noncentral3_third_parameter(self):
        r = run_check('noncentral3', 27, samples=50, seed=1)
        w = [w for w in r.counterexamples if 'statement' in w]
        self.assertEqual(len(w), 1)
        self.assertNotEqual(w[0]['computed'], w[0]['stated'])

    def test_hall(self):
        r = run_check('hall', 27)
        self.assertEqual(r.verdict, PASS)
        blocks = r.stats['blocks']
        self.assertEqual(len(blocks), 3)
        for b in blocks:
            self.assertEqual(len(b), 28)
        for i in range(3):
            for j in range(i + 1, 3):
                self.assertFalse(set(blocks[i]) & set(blocks[j]))

    def test_design_sampled(self):
        r = run_check('design', 27, samples=2000, seed=5)
        self.assertEqual(r.verdict, PASS)
        self.assertEqual(r.stats['blocks_through_point'], [729])

import json
import os
import subprocess
import sys
import tempfile
import unittest

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

def reekit(*args):
    env = dict(os.environ, PYTHONPATH=ROOT)
    env.pop('REEKIT_DEBUG_LEVEL', None)
    env.pop('REEKIT_THREADS', None)
    p = subprocess.run([sys.executable, os.path.join(ROOT, 'bin', 'reekit')] + list(args),
                       stdout=subprocess.PIPE, stderr=subprocess.PIPE,
                       universal_newlines=True, env=env)
    return p.returncode, p.stdout

class TestGeneric(unittest.TestCase):

    def test_version(self):
        rc, out = reekit('version')
        self.assertEqual(rc, 0)
        self.assertIn('reekit', out)

    def test_unknown_command(self):
        self.assertEqual(reekit('frobnicate')[0], 2)

    def test_prefix(self):
        rc, out = reekit('fi', '--q', '27')
        self.assertEqual(rc, 0)
        self.assertIn('modulus: x^3 + 2x + 1', out)


class TestField(unittest.TestCase):

    def test_bad_field(self):
        self.assertEqual(reekit('field', '--q', '9')[0], 2)
        self.assertEqual(reekit('field', '--e', '-1')[0], 2)
        self.assertEqual(reekit('field', '--q', '3', '--e', '1')[0], 2)


class TestElement(unittest.TestCase):

    def test_orders(self):
        rc, out = reekit('-m', 'element', '--q', '27', 'order',
                         'inf:100,000,000', 'inf:000,000,100')
        self.assertEqual(rc, 0)
        self.assertEqual(out.split(), ['reekit:', 'order;9', 'order;3'])

    def test_trace_of_h(self):
        rc, out = reekit('element', '--q', '3', 'trace', 'h')
        self.assertEqual(rc, 0)
        self.assertTrue(out.strip().endswith('2'))

    def test_bad_element(self):
        self.assertEqual(reekit('element', '--q', '3', 'order', 'inf:1,2')[0], 2)
        self.assertEqual(reekit('element', '--q', '3', 'frob', 'h')[0], 2)


class TestUnital(unittest.TestCase):

    def test_export_import(self):
        fd, path = tempfile.mkstemp(suffix='.json')
        os.close(fd)
        try:
            rc, out = reekit('unital', '--q', '3', '--output', path)
            self.assertEqual(rc, 0)
            with open(path) as f:
                doc = json.load(f)
            self.assertEqual(len(doc['points']), 28)
            self.assertEqual(len(doc['blocks']), 63)
            self.assertEqual(reekit('unital', '--q', '3', '--import', path)[0], 0)
        finally:
            os.unlink(path)

    def test_refuses_blocks_at_27(self):
        self.assertEqual(reekit('unital', '--q', '27')[0], 2)


class TestVerify(unittest.TestCase):

    def test_json(self):
        rc, out = reekit('verify', '--q', '3', '--lemma', 'order', '--format', 'json')
        self.assertEqual(rc, 0)
        lines = [json.loads(x) for x in out.splitlines()]
        self.assertEqual(lines[0]['name'], 'order')
        self.assertEqual(lines[0]['verdict'], 'DISCREPANCY')
        self.assertEqual(lines[0]['stats']['computed'], 1512)
        self.assertEqual(lines[-1]['failures'], [])

    def test_star_exits_clean(self):
        rc, out = reekit('verify', '--q', '3', '--lemma', 'star', '--format', 'json')
        self.assertEqual(rc, 0)
        lines = [json.loads(x) for x in out.splitlines()]
        self.assertEqual(lines[0]['verdict'], 'DISCREPANCY')
        self.assertEqual(lines[-1]['failures'], [])

    def test_unknown_lemma(self):
        self.assertEqual(reekit('verify', '--q', '3', '--lemma', 'nosuch')[0], 2)


class TestPra(unittest.TestCase):

    def test_census(self):
        rc, out = reekit('pra', 'census', '--group', 'a5', '--n', '3')
        self.assertEqual(rc, 0)
        doc = json.loads(out)
        self.assertEqual(len(doc['components']), 1)
        self.assertTrue(doc['every_component_has_redundant'])

    def test_census_too_large(self):
        self.assertEqual(reekit('pra', 'census', '--q', '27', '--n', '3')[0], 2)

    def test_random_is_deterministic(self):
        args = ('pra', 'random', '--group', 'psl27', '--n', '3', '--steps', '20', '--seed', '1')
        first = reekit(*args)
        self.assertEqual(first[0], 0)
        self.assertEqual(first, reekit(*args))

    def test_random_zero_steps(self):
        rc, out = reekit('pra', 'random', '--group', 'a5', '--n', '3', '--steps', '0', '--seed', '1')
        self.assertEqual(rc, 0)
        self.assertEqual(reekit('pra', 'random', '--group', 'a5', '--n', '3', '--steps', '-1')[0], 2)

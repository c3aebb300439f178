# coding: utf-8
import json
import math
import unittest

from ramp.oracle.verdict import mean_verdict
from ramp.oracle.verdict import proportion_verdict
from ramp.oracle.verdict import significance


class ProportionVerdictTestCase(unittest.TestCase):
    def test_z_test(self):
        verdict = proportion_verdict('x', 0.1, 10_300, 100_000, seed=1)
        self.assertEqual(verdict.method, 'z-test')
        self.assertAlmostEqual(verdict.standard_error, math.sqrt(0.09 / 100_000), places=15)
        self.assertAlmostEqual(verdict.z_score, 0.003 / verdict.standard_error, places=9)
        self.assertTrue(verdict.passed)

        verdict = proportion_verdict('x', 0.1, 11_000, 100_000, seed=1)
        self.assertFalse(verdict.passed)

        verdict = proportion_verdict('x', 0.1, 11_000, 100_000, seed=1, z_threshold=12.0)
        self.assertTrue(verdict.passed)

    def test_degenerate(self):
        self.assertTrue(proportion_verdict('x', 0.0, 0, 10_000, seed=1).passed)
        self.assertFalse(proportion_verdict('x', 0.0, 1, 10_000, seed=1).passed)
        self.assertTrue(proportion_verdict('x', 1.0, 10_000, 10_000, seed=1).passed)
        self.assertEqual(proportion_verdict('x', 0.0, 1, 10_000, seed=1).z_score, math.inf)

    def test_low_events(self):
        # One event where 0.01 were expected is unlikely, not damning.
        verdict = proportion_verdict('x', 1e-8, 1, 1_000_000, seed=1)
        self.assertTrue(verdict.low_events)
        self.assertEqual(verdict.method, 'exact-tail')
        self.assertTrue(verdict.passed)
        self.assertGreater(abs(verdict.z_score), 4)

        self.assertFalse(proportion_verdict('x', 1e-8, 3, 1_000_000, seed=1).passed)
        self.assertTrue(proportion_verdict('x', 5e-6, 5, 1_000_000, seed=1).passed)

    def test_to_dict(self):
        data = proportion_verdict('x', 0.0, 1, 10_000, seed=3).to_dict()
        self.assertIsNone(data['z_score'])
        self.assertEqual(data['seed'], 3)
        json.dumps(data)


class MeanVerdictTestCase(unittest.TestCase):
    def test(self):
        # 1000 trials: 900 read nothing extra, 100 read one extra block.
        verdict = mean_verdict('a_r', 0.1, 100, 100, 1000, seed=1)
        self.assertAlmostEqual(verdict.estimate, 0.1, places=15)
        self.assertAlmostEqual(verdict.standard_error, math.sqrt(0.09 / 1000), places=15)
        self.assertTrue(verdict.passed)

        self.assertFalse(mean_verdict('a_r', 0.05, 100, 100, 1000, seed=1).passed)

    def test_degenerate(self):
        self.assertTrue(mean_verdict('a_r', 0.0, 0, 0, 10_000, seed=1).passed)
        self.assertFalse(mean_verdict('a_r', 0.0, 2, 4, 10_000, seed=1).passed)

    def test_low_events(self):
        verdict = mean_verdict('a_r', 1e-7, 0, 0, 1_000_000, seed=1)
        self.assertTrue(verdict.low_events)
        self.assertEqual(verdict.method, 'exact-tail')
        self.assertTrue(verdict.passed)

    def test_significance(self):
        self.assertAlmostEqual(significance(4.0), 6.334e-5, delta=1e-8)
        self.assertAlmostEqual(significance(1.959964), 0.05, places=6)
        for z in [1.0, 2.5, 4.0, 6.0, 8.0]:
            with self.subTest(z=z):
                self.assertAlmostEqual(significance(z) / math.erfc(z / math.sqrt(2.0)), 1.0, delta=1e-10)


if __name__ == '__main__':
    unittest.main()

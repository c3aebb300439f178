# coding: utf-8
import math
import unittest

from ramp.codes.bch import bch_codeword_length
from ramp.codes.memory import MemoryConfig
from ramp.codes.memory import PERF_TIER_FILTER
from ramp.exceptions import DomainError
from ramp.exceptions import InfeasibleError
from ramp.schemes.optimizer import optimize
from ramp.schemes.optimizer import violated_targets
from ramp.schemes.report import analyze
from ramp.schemes.report import reference_due
from ramp.schemes.scheme import Scheme


TARGET_NDE = math.log(1e-22)


def overhead(t):
    return 0.1411 + 12 * t / 2048


class OptimizeTestCase(unittest.TestCase):
    def setUp(self):
        self.cfg = MemoryConfig()
        self.target = reference_due(self.cfg)

    def test_any_code_qualifies(self):
        for scheme in [Scheme.baseline(), Scheme.primary_backup(3), Scheme.erasure_code(5, 3)]:
            with self.subTest(scheme=scheme.label):
                self.assertEqual(optimize(self.cfg, scheme, 0.0).code.t, 0)

    def test_round_trip(self):
        report = optimize(self.cfg, Scheme.baseline(), self.target)
        self.assertEqual(report.code.t, 22)
        self.assertEqual(report.p_lb_due, self.target)

    def test_operating_points(self):
        test_data = [
            {'cfg': MemoryConfig(), 'scheme': Scheme.primary_backup(3), 'nde': None, 'expected': 9},
            {'cfg': MemoryConfig(), 'scheme': Scheme.primary_backup(3), 'nde': TARGET_NDE, 'expected': 11},
            {'cfg': MemoryConfig(), 'scheme': Scheme.erasure_code(5, 3), 'nde': None, 'expected': 10},
            {'cfg': MemoryConfig(), 'scheme': Scheme.erasure_code(5, 3), 'nde': TARGET_NDE, 'expected': 11},
            {'cfg': MemoryConfig(perf_filter=PERF_TIER_FILTER), 'scheme': Scheme.primary_backup(3), 'nde': None, 'expected': 8},
            {'cfg': MemoryConfig(perf_filter=PERF_TIER_FILTER), 'scheme': Scheme.primary_backup(3), 'nde': TARGET_NDE, 'expected': 10},
        ]
        for data in test_data:
            cfg, scheme = data['cfg'], data['scheme']
            with self.subTest(scheme=scheme.label, perf_filter=cfg.perf_filter, nde=data['nde']):
                report = optimize(cfg, scheme, reference_due(cfg), data['nde'])
                self.assertEqual(report.code.t, data['expected'])
                self.assertAlmostEqual(report.overhead_total, overhead(data['expected']), places=12)
                self.assertLess(report.overhead_total, 0.27)
                self.assertTrue(0.16 <= report.overhead_total <= 0.21)

    def test_headline_numbers(self):
        pb = optimize(self.cfg, Scheme.primary_backup(3), self.target)
        self.assertEqual(f'{pb.overhead_total:.1%}', '19.4%')

        pb_nde = optimize(self.cfg, Scheme.primary_backup(3), self.target, TARGET_NDE)
        self.assertEqual(f'{pb_nde.overhead_total:.1%}', '20.6%')
        # Two more correctable bits cost 24 check bits per 2048 data bits.
        self.assertAlmostEqual(pb_nde.overhead_total - pb.overhead_total, 24 / 2048, places=12)

        ec = optimize(self.cfg, Scheme.erasure_code(5, 3), self.target)
        self.assertEqual(f'{ec.overhead_total:.1%}', '20.0%')

    def test_extra_reads_at_operating_points(self):
        # With the NDE target in place both schemes read extra blocks less than
        # once per 1e11 logical reads.
        for scheme in [Scheme.primary_backup(3), Scheme.erasure_code(5, 3)]:
            with self.subTest(scheme=scheme.label):
                report = optimize(self.cfg, scheme, self.target, TARGET_NDE)
                self.assertLess(report.a_r, 1e-11)

        ec = optimize(self.cfg, Scheme.erasure_code(5, 3), self.target)
        self.assertLess(ec.a_r, 1e-11)

        # Primary-backup at its DUE-only point sits at p_b ~ 4e-11.
        pb = optimize(self.cfg, Scheme.primary_backup(3), self.target)
        self.assertTrue(1e-11 < pb.a_r < 1e-10)

    def test_minimal(self):
        for scheme in [Scheme.baseline(), Scheme.primary_backup(2), Scheme.primary_backup(3), Scheme.erasure_code(5, 3)]:
            for target_nde in [None, TARGET_NDE]:
                with self.subTest(scheme=scheme.label, target_nde=target_nde):
                    report = optimize(self.cfg, scheme, self.target, target_nde)
                    self.assertEqual(violated_targets(report, self.target, target_nde), ())
                    weaker = analyze(bch_codeword_length(2048, report.code.t - 1), self.cfg, scheme)
                    self.assertNotEqual(violated_targets(weaker, self.target, target_nde), ())

    def test_infeasible(self):
        with self.assertRaises(InfeasibleError) as context:
            optimize(self.cfg, Scheme.baseline(), self.target, t_max=5)
        self.assertEqual(context.exception.constraint, 'due')
        self.assertEqual(context.exception.t_max, 5)

        # t = 10 already meets the DUE target, but not the NDE one.
        with self.assertRaises(InfeasibleError) as context:
            optimize(self.cfg, Scheme.primary_backup(3), self.target, TARGET_NDE, t_max=10)
        self.assertEqual(context.exception.constraint, 'nde')

        with self.assertRaises(InfeasibleError) as context:
            optimize(self.cfg, Scheme.baseline(), self.target, TARGET_NDE, t_max=3)
        self.assertEqual(context.exception.constraint, 'due and nde')

    def test_errors(self):
        test_data = [
            {'target_due': -math.inf, 'target_nde': None},
            {'target_due': 0.5, 'target_nde': None},
            {'target_due': math.nan, 'target_nde': None},
            {'target_due': self.target, 'target_nde': -math.inf},
        ]
        for data in test_data:
            with self.subTest(**data):
                with self.assertRaises(DomainError):
                    optimize(self.cfg, Scheme.primary_backup(3), data['target_due'], data['target_nde'])

        with self.assertRaises(DomainError):
            optimize(self.cfg, Scheme.primary_backup(3), self.target, t_max=-1)


if __name__ == '__main__':
    unittest.main()

# coding: utf-8
from fractions import Fraction
import unittest

from ramp.exceptions import OracleError
from ramp.oracle.enumeration import BlockOutcome
from ramp.oracle.enumeration import ReadResult
from ramp.oracle.enumeration import enumerate_scheme
from ramp.oracle.enumeration import read_logical_block
from ramp.schemes.scheme import Scheme


OK, DUE, NDE = BlockOutcome.OK, BlockOutcome.DUE, BlockOutcome.NDE


class ReadLogicalBlockTestCase(unittest.TestCase):
    def test(self):
        test_data = [
            {'outcomes': (OK, DUE, DUE), 'k': 1, 'read': 1, 'result': ReadResult.SUCCESS},
            {'outcomes': (DUE, DUE, OK), 'k': 1, 'read': 3, 'result': ReadResult.SUCCESS},
            {'outcomes': (DUE, NDE, OK), 'k': 1, 'read': 2, 'result': ReadResult.NDE},
            {'outcomes': (DUE, DUE, DUE), 'k': 1, 'read': 3, 'result': ReadResult.DUE},
            {'outcomes': (OK, DUE, OK, OK, DUE), 'k': 3, 'read': 4, 'result': ReadResult.SUCCESS},
            {'outcomes': (NDE, DUE, OK, OK, DUE), 'k': 3, 'read': 4, 'result': ReadResult.NDE},
            {'outcomes': (OK, DUE, DUE, OK, DUE), 'k': 3, 'read': 5, 'result': ReadResult.DUE},
            {'outcomes': (OK, OK, OK, NDE, NDE), 'k': 3, 'read': 3, 'result': ReadResult.SUCCESS},
        ]
        for data in test_data:
            with self.subTest(outcomes=[o.value for o in data['outcomes']], k=data['k']):
                trial = read_logical_block(data['outcomes'], data['k'])
                self.assertEqual(trial.blocks_read, data['read'])
                self.assertEqual(trial.result, data['result'])
                self.assertEqual(trial.outcomes, data['outcomes'])


class EnumerateSchemeTestCase(unittest.TestCase):
    def test_no_errors(self):
        for scheme in [Scheme.baseline(), Scheme.primary_backup(3), Scheme.erasure_code(5, 3)]:
            with self.subTest(scheme=scheme.label):
                self.assertEqual(tuple(enumerate_scheme(0, 0, scheme))[:3], (0, 0, 0))

    def test_two_replicas(self):
        p_lb_due, a_r, p_any_nde, total = enumerate_scheme(Fraction(1, 2), 0, Scheme.primary_backup(2))
        self.assertEqual(p_lb_due, Fraction(1, 4))
        self.assertEqual(a_r, Fraction(1, 2))
        self.assertEqual(p_any_nde, 0)
        self.assertEqual(total, 1)

    def test_erasure_code(self):
        p = Fraction(1, 1000)
        result = enumerate_scheme(p, 0, Scheme.erasure_code(5, 3))
        expected = sum(Fraction(c) * p ** i * (1 - p) ** (5 - i) for i, c in [(3, 10), (4, 5), (5, 1)])
        self.assertEqual(result.p_lb_due, expected)
        self.assertAlmostEqual(float(result.a_r) / 3e-3, 1.0, delta=1e-2)
        self.assertAlmostEqual(float(result.p_lb_due), 9.985e-9, delta=1e-11)

    def test_probabilities_sum_to_one(self):
        for scheme in [Scheme.baseline(), Scheme.primary_backup(4), Scheme.erasure_code(5, 3),
                       Scheme.erasure_code(4, 2), Scheme.primary_backup(20), Scheme.erasure_code(20, 10)]:
            for p_due, p_nde in [(Fraction(1, 2), Fraction(1, 4)), (Fraction(1, 10), Fraction(1, 100)), (1e-3, 1e-4)]:
                with self.subTest(scheme=scheme.label, p_due=p_due):
                    self.assertEqual(enumerate_scheme(p_due, p_nde, scheme).total, 1)

    def test_paths_match_vectors(self):
        for scheme in [Scheme.baseline(), Scheme.primary_backup(3), Scheme.primary_backup(6),
                       Scheme.erasure_code(5, 3), Scheme.erasure_code(4, 2)]:
            for p_due, p_nde in [(Fraction(1, 2), Fraction(1, 4)), (Fraction(1, 3), 0), (Fraction(1, 1000), Fraction(1, 7))]:
                with self.subTest(scheme=scheme.label, p_due=p_due, p_nde=p_nde):
                    self.assertEqual(
                        enumerate_scheme(p_due, p_nde, scheme),
                        enumerate_scheme(p_due, p_nde, scheme, exhaustive=True),
                    )

    def test_nde_does_not_trigger_fallback(self):
        # Every block either fails detectably or silently: the first non-DUE
        # block ends the read.
        result = enumerate_scheme(Fraction(1, 2), Fraction(1, 2), Scheme.primary_backup(3))
        self.assertEqual(result.p_lb_due, Fraction(1, 8))
        self.assertEqual(result.p_any_nde, Fraction(7, 8))

    def test_errors(self):
        with self.assertRaises(OracleError):
            enumerate_scheme(0.1, 0, Scheme.primary_backup(21))

        with self.assertRaises(OracleError):
            enumerate_scheme(0.1, 0, Scheme.primary_backup(11), exhaustive=True)

        with self.assertRaises(OracleError):
            enumerate_scheme(0.7, 0.5, Scheme.primary_backup(3))

        with self.assertRaises(OracleError):
            enumerate_scheme(-0.1, 0, Scheme.primary_backup(3))


if __name__ == '__main__':
    unittest.main()

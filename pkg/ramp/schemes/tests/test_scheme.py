# coding: utf-8
import unittest

from ramp.exceptions import DomainError
from ramp.schemes.scheme import Scheme
from ramp.schemes.scheme import SchemeKind


class TestCase(unittest.TestCase):
    def test(self):
        baseline = Scheme.baseline()
        self.assertEqual((baseline.kind, baseline.n, baseline.k), (SchemeKind.BASELINE, 1, 1))

        pb = Scheme.primary_backup(3)
        self.assertEqual((pb.kind, pb.n, pb.k), (SchemeKind.PRIMARY_BACKUP, 3, 1))

        ec = Scheme.erasure_code(5, 3)
        self.assertEqual((ec.kind, ec.n, ec.k), (SchemeKind.ERASURE_CODE, 5, 3))

        # A single-replica primary-backup is allowed; it degenerates to baseline.
        self.assertEqual(Scheme.primary_backup(1).n, 1)

    def test_errors(self):
        test_data = [
            {'kind': SchemeKind.BASELINE, 'n': 2, 'k': 1},
            {'kind': SchemeKind.PRIMARY_BACKUP, 'n': 0, 'k': 1},
            {'kind': SchemeKind.PRIMARY_BACKUP, 'n': 3, 'k': 2},
            {'kind': SchemeKind.ERASURE_CODE, 'n': 3, 'k': 3},
            {'kind': SchemeKind.ERASURE_CODE, 'n': 5, 'k': 0},
            {'kind': SchemeKind.ERASURE_CODE, 'n': 5.0, 'k': 3},
            {'kind': 'baseline', 'n': 1, 'k': 1},
        ]
        for data in test_data:
            with self.subTest(**data):
                with self.assertRaises(DomainError):
                    Scheme(data['kind'], n=data['n'], k=data['k'])

    def test_with_replicas(self):
        self.assertEqual(Scheme.primary_backup(3).with_replicas(5), Scheme.primary_backup(5))
        self.assertEqual(Scheme.erasure_code(5, 3).with_replicas(6), Scheme.erasure_code(6, 3))

        with self.assertRaises(DomainError):
            Scheme.baseline().with_replicas(2)

        with self.assertRaises(DomainError):
            Scheme.erasure_code(5, 3).with_replicas(3)

    def test_label(self):
        self.assertEqual(str(Scheme.baseline()), 'baseline')
        self.assertEqual(str(Scheme.primary_backup(3)), 'pb-n3')
        self.assertEqual(str(Scheme.erasure_code(5, 3)), 'ec-n5-k3')


if __name__ == '__main__':
    unittest.main()

# coding: utf-8
"""
Analytic scheme formulas checked against exact enumeration.

Logical DUE and logical NDE have to agree to a relative 1e-12 and the
corrected a_r to an absolute 1e-9. The as-printed a_r rows are reported but
never fail a run: the printed primary-backup sum drops the all-N-fail
outcome and the printed erasure-coding sum over-counts its first term.
"""
from dataclasses import dataclass

from ramp.numerics.log_prob import LogProb
from ramp.oracle.enumeration import enumerate_scheme
from ramp.schemes.replication import EXTRA_READS_VARIANTS
from ramp.schemes.replication import ec_extra_reads
from ramp.schemes.replication import ec_logical_due
from ramp.schemes.replication import logical_nde
from ramp.schemes.replication import pb_extra_reads
from ramp.schemes.replication import pb_logical_due
from ramp.schemes.scheme import SchemeKind


RELATIVE_TOLERANCE = 1e-12
EXTRA_READS_TOLERANCE = 1e-9
DEFAULT_NDE_RATIO = 0.1


@dataclass(frozen=True)
class FormulaCheck:
    scheme: str
    p_due: float
    p_nde: float
    quantity: str
    variant: str
    analytic: float
    exact: float
    tolerance: float
    relative: bool
    binding: bool

    @property
    def error(self):
        difference = abs(self.analytic - self.exact)
        if self.relative:
            return difference / self.exact if self.exact else difference
        return difference

    @property
    def agrees(self):
        return self.error <= self.tolerance

    def to_dict(self):
        return {
            'scheme': self.scheme,
            'p_due': self.p_due,
            'p_nde': self.p_nde,
            'quantity': self.quantity,
            'variant': self.variant,
            'analytic': self.analytic,
            'exact': self.exact,
            'error': self.error,
            'tolerance': self.tolerance,
            'relative': self.relative,
            'agrees': self.agrees,
            'binding': self.binding,
        }


def _logical_due(p_due, scheme):
    p_b = LogProb.from_probability(p_due)
    if scheme.kind is SchemeKind.ERASURE_CODE:
        return ec_logical_due(p_b, scheme.n, scheme.k)
    return pb_logical_due(p_b, scheme.n)


def _extra_reads(p_due, scheme, variant):
    if scheme.kind is SchemeKind.ERASURE_CODE:
        return ec_extra_reads(p_due, scheme.n, scheme.k, variant)
    return pb_extra_reads(p_due, scheme.n, variant)


def _extra_reads_tolerance(p_due, scheme, variant):
    if variant == 'as-printed' and scheme.kind is SchemeKind.PRIMARY_BACKUP:
        # The missing outcome is worth N reads with probability p^N.
        return max(EXTRA_READS_TOLERANCE, 2 * p_due ** scheme.n * scheme.n)
    return EXTRA_READS_TOLERANCE


def check_scheme(p_due, scheme, p_nde=None):
    if p_nde is None:
        p_nde = p_due * DEFAULT_NDE_RATIO
    exact = enumerate_scheme(p_due, p_nde, scheme)
    label = scheme.label

    checks = [
        FormulaCheck(label, p_due, p_nde, 'p_lb_due', '', _logical_due(p_due, scheme).probability,
                     float(exact.p_lb_due), RELATIVE_TOLERANCE, relative=True, binding=True),
        FormulaCheck(label, p_due, p_nde, 'p_lb_nde', '',
                     logical_nde(LogProb.from_probability(p_due), LogProb.from_probability(p_nde),
                                 scheme.n, scheme.k).probability,
                     float(exact.p_any_nde), RELATIVE_TOLERANCE, relative=True, binding=True),
    ]
    variants = ('',) if scheme.kind is SchemeKind.BASELINE else EXTRA_READS_VARIANTS
    for variant in variants:
        analytic = 0.0 if not variant else _extra_reads(p_due, scheme, variant)
        checks.append(FormulaCheck(
            label, p_due, p_nde, 'a_r', variant, analytic, float(exact.a_r),
            _extra_reads_tolerance(p_due, scheme, variant), relative=False, binding=variant != 'as-printed',
        ))
    return checks


def check_formulas(p_grid, schemes, nde_ratio=DEFAULT_NDE_RATIO):
    checks = []
    for scheme in schemes:
        for p_due in p_grid:
            checks.extend(check_scheme(p_due, scheme, p_due * nde_ratio))
    return checks


def failed_checks(checks):
    return [check for check in checks if check.binding and not check.agrees]
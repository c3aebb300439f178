# coding: utf-8
"""
Weakest code that still meets the reliability targets.

Only the code strength t is searched; k stays fixed. Logical DUE and
per-replica NDE both fall as t grows, so a linear scan from t = 0 stops at
the minimal t, which also has the minimal storage overhead.
"""
import logging
import math

from ramp.codes.bch import CodeSpec
from ramp.codes.memory import DEFAULT_DATA_BITS
from ramp.exceptions import DomainError
from ramp.exceptions import InfeasibleError
from ramp.numerics.log_prob import LogProb
from ramp.schemes.report import analyze


logger = logging.getLogger(__name__)

DEFAULT_T_MAX = 512


def _check_target(name, target):
    target = float(target)
    if math.isnan(target) or target > 0.0 or target == -math.inf:
        raise DomainError(f'{name} must be a log-probability of a value in (0, 1], got {target!r}')
    return LogProb(target)


def violated_targets(report, target_due, target_nde=None):
    """
    The constraints the report violates, as a tuple of 'due' / 'nde'.
    """
    violated = []
    if report.p_lb_due > target_due:
        violated.append('due')
    if target_nde is not None and report.p_b_nde > target_nde:
        violated.append('nde')
    return tuple(violated)


def optimize(cfg, scheme, target_due, target_nde=None, k=DEFAULT_DATA_BITS, t_max=DEFAULT_T_MAX, a_r_variant=None):
    target_due = _check_target('target_due', target_due)
    if target_nde is not None:
        target_nde = _check_target('target_nde', target_nde)
    if not isinstance(t_max, int) or t_max < 0:
        raise DomainError(f't_max must be a non-negative integer, got {t_max!r}')

    violated = ()
    for t in range(t_max + 1):
        report = analyze(CodeSpec(k=k, t=t), cfg, scheme, a_r_variant)
        violated = violated_targets(report, target_due, target_nde)
        if not violated:
            logger.info(
                'optimize %s: t*=%d %s overhead=%.4f',
                scheme.label, t, report.code.label, report.overhead_total,
            )
            return report
        logger.debug('optimize %s: t=%d violates %s', scheme.label, t, ', '.join(violated))

    constraint = ' and '.join(violated)
    raise InfeasibleError(
        constraint,
        t_max,
        f'{scheme.label}: no t <= {t_max} meets the {constraint} target',
    )

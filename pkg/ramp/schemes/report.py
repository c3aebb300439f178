# coding: utf-8
"""
End-to-end analysis of one (code, memory, scheme) design point.

cache line -> physical block -> logical block, in log space throughout.
"""
from dataclasses import asdict
from dataclasses import dataclass
import logging

from ramp.codes.bch import CodeSpec
from ramp.codes.cache_line import cache_line_due
from ramp.codes.cache_line import cache_line_nde
from ramp.codes.cache_line import storage_overhead
from ramp.codes.memory import DEFAULT_DATA_BITS
from ramp.codes.memory import MemoryConfig
from ramp.codes.memory import REFERENCE_T
from ramp.numerics.log_prob import ZERO
from ramp.schemes.block import block_fail_prob
from ramp.schemes.replication import DEFAULT_EC_VARIANT
from ramp.schemes.replication import DEFAULT_PB_VARIANT
from ramp.schemes.replication import ec_extra_reads
from ramp.schemes.replication import ec_logical_due
from ramp.schemes.replication import logical_nde
from ramp.schemes.replication import pb_extra_reads
from ramp.schemes.replication import pb_logical_due
from ramp.schemes.scheme import Scheme
from ramp.schemes.scheme import SchemeKind


logger = logging.getLogger(__name__)

PROBABILITY_FIELDS = ('p_c_due', 'p_c_nde', 'p_b_due', 'p_b_nde', 'p_lb_due', 'p_lb_nde')


@dataclass(frozen=True)
class ReliabilityReport:
    code: CodeSpec
    cfg: MemoryConfig
    scheme: Scheme
    p_c_due: float
    p_c_nde: float
    p_b_due: float
    p_b_nde: float
    p_lb_due: float
    p_lb_nde: float
    a_r: float
    relative_reads: float
    overhead_total: float
    a_r_variant: str = ''

    def to_dict(self):
        """
        JSON-ready view; every probability comes with its log10 so values
        below the double range survive the trip.
        """
        data = {
            'scheme': self.scheme.label,
            'kind': self.scheme.kind.value,
            'N': self.scheme.n,
            'K': self.scheme.k,
            'code': self.code.label,
            'n': self.code.n,
            'k': self.code.k,
            't': self.code.t,
            'q_miscorrect': self.code.q_miscorrect,
            'memory': asdict(self.cfg),
            'a_r': self.a_r,
            'a_r_variant': self.a_r_variant,
            'relative_reads': self.relative_reads,
            'overhead_total': self.overhead_total,
        }
        for name in PROBABILITY_FIELDS:
            log_p = getattr(self, name)
            data[name] = log_p.probability
            data[f'{name}_log10'] = log_p.log10 if not log_p.is_zero() else None
        return data


def default_variant(scheme):
    if scheme.kind is SchemeKind.ERASURE_CODE:
        return DEFAULT_EC_VARIANT
    return DEFAULT_PB_VARIANT


def analyze(code, cfg, scheme, a_r_variant=None):
    variant = a_r_variant or default_variant(scheme)

    p_c_due = cache_line_due(code, cfg)
    # Without a decoder nothing gets miscorrected; every raw error is a DUE.
    p_c_nde = ZERO if code.t == 0 else cache_line_nde(code, cfg)

    p_b_due = block_fail_prob(p_c_due, cfg, code.k)
    p_b_nde = block_fail_prob(p_c_nde, cfg, code.k)

    if scheme.kind is SchemeKind.BASELINE:
        p_lb_due = p_b_due
        a_r = 0.0
    elif scheme.kind is SchemeKind.PRIMARY_BACKUP:
        p_lb_due = pb_logical_due(p_b_due, scheme.n)
        a_r = pb_extra_reads(p_b_due.probability, scheme.n, variant)
    else:
        p_lb_due = ec_logical_due(p_b_due, scheme.n, scheme.k)
        a_r = ec_extra_reads(p_b_due.probability, scheme.n, scheme.k, variant)

    p_lb_nde = logical_nde(p_b_due, p_b_nde, scheme.n, scheme.k)

    report = ReliabilityReport(
        code=code,
        cfg=cfg,
        scheme=scheme,
        p_c_due=p_c_due,
        p_c_nde=p_c_nde,
        p_b_due=p_b_due,
        p_b_nde=p_b_nde,
        p_lb_due=p_lb_due,
        p_lb_nde=p_lb_nde,
        a_r=a_r,
        relative_reads=a_r / scheme.k,
        overhead_total=storage_overhead(code, cfg),
        a_r_variant='' if scheme.kind is SchemeKind.BASELINE else variant,
    )
    logger.debug(
        'analyze %s %s: log10 p_lb_due=%.4f overhead=%.4f',
        scheme.label, code.label, report.p_lb_due.log10, report.overhead_total,
    )
    return report


def reference_due(cfg, k=DEFAULT_DATA_BITS, t=REFERENCE_T):
    """
    Logical DUE of the original chipkill design, BCH(k + t*(ceil(log2 k)+1), k, t)
    without replication, under the same memory parameters.
    """
    return analyze(CodeSpec(k=k, t=t), cfg, Scheme.baseline()).p_lb_due

# coding: utf-8
from ramp.schemes.block import block_fail_prob
from ramp.schemes.optimizer import optimize
from ramp.schemes.replication import ec_extra_reads
from ramp.schemes.replication import ec_logical_due
from ramp.schemes.replication import logical_nde
from ramp.schemes.replication import pb_extra_reads
from ramp.schemes.replication import pb_logical_due
from ramp.schemes.report import ReliabilityReport
from ramp.schemes.report import analyze
from ramp.schemes.report import reference_due
from ramp.schemes.scheme import Scheme
from ramp.schemes.scheme import SchemeKind
from ramp.schemes.sweep import SweepRow
from ramp.schemes.sweep import SweepTable
from ramp.schemes.sweep import sweep

__all__ = [
    'ReliabilityReport',
    'Scheme',
    'SchemeKind',
    'SweepRow',
    'SweepTable',
    'analyze',
    'block_fail_prob',
    'ec_extra_reads',
    'ec_logical_due',
    'logical_nde',
    'optimize',
    'pb_extra_reads',
    'pb_logical_due',
    'reference_due',
    'sweep',
]

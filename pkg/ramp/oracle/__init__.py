# coding: utf-8
from ramp.oracle.enumeration import BlockOutcome
from ramp.oracle.enumeration import ReadResult
from ramp.oracle.enumeration import TrialOutcome
from ramp.oracle.enumeration import enumerate_scheme
from ramp.oracle.enumeration import read_logical_block
from ramp.oracle.formulas import check_formulas
from ramp.oracle.montecarlo import montecarlo_bits
from ramp.oracle.montecarlo import montecarlo_scheme
from ramp.oracle.verdict import ValidationVerdict

__all__ = [
    'BlockOutcome',
    'ReadResult',
    'TrialOutcome',
    'ValidationVerdict',
    'check_formulas',
    'enumerate_scheme',
    'montecarlo_bits',
    'montecarlo_scheme',
    'read_logical_block',
]

# coding: utf-8
from ramp.numerics.binomial import complement_power
from ramp.numerics.binomial import log1mexp
from ramp.numerics.binomial import log_binomial
from ramp.numerics.binomial import log_binomial_tail
from ramp.numerics.binomial import log_binomial_tail_from_log
from ramp.numerics.binomial import log_complement_power
from ramp.numerics.binomial import log_sum_exp
from ramp.numerics.log_prob import LogProb
from ramp.numerics.log_prob import ONE
from ramp.numerics.log_prob import ZERO
from ramp.numerics.log_prob import format_probability

__all__ = [
    'LogProb',
    'ONE',
    'ZERO',
    'complement_power',
    'format_probability',
    'log1mexp',
    'log_binomial',
    'log_binomial_tail',
    'log_binomial_tail_from_log',
    'log_complement_power',
    'log_sum_exp',
]

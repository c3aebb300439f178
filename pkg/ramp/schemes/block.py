# coding: utf-8
"""
Physical-block failure probability.

Reading a physical block succeeds only if every cache line in it reads
successfully, so with m independent units per block:

p_b = 1 - (1 - p_c)^m

m is b / c under the 'cache-line' granularity and ceil(8b / k) under the
'codeword' granularity, where one k-bit codeword can span several lines.
"""
from ramp.codes.memory import DEFAULT_DATA_BITS
from ramp.numerics.binomial import log_complement_power


def units_per_block(cfg, k=DEFAULT_DATA_BITS):
    if cfg.block_granularity == 'codeword':
        return cfg.codewords_per_block(k)
    return cfg.lines_per_block


def block_fail_prob(p_c, cfg, k=DEFAULT_DATA_BITS):
    return log_complement_power(p_c, units_per_block(cfg, k))

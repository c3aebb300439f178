# coding: utf-8
from ramp.codes.bch import CodeSpec
from ramp.codes.bch import bch_codeword_length
from ramp.codes.bch import miscorrection_fraction
from ramp.codes.cache_line import cache_line_due
from ramp.codes.cache_line import cache_line_nde
from ramp.codes.cache_line import storage_overhead
from ramp.codes.cache_line import uncorrectable_tail
from ramp.codes.memory import MemoryConfig
from ramp.codes.memory import PERF_TIER_FILTER

__all__ = [
    'CodeSpec',
    'MemoryConfig',
    'PERF_TIER_FILTER',
    'bch_codeword_length',
    'cache_line_due',
    'cache_line_nde',
    'miscorrection_fraction',
    'storage_overhead',
    'uncorrectable_tail',
]

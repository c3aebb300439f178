# coding: utf-8
"""
Memory-system parameters of the two-tier chipkill design.

The performance tier is modeled only by what it costs (perf_tier_overhead,
a fraction of the data size) and by how often an error gets past it to the
storage-optimized tier (perf_filter).
"""
from dataclasses import dataclass
import math

from ramp.exceptions import ConfigurationError


# RBER of the NVM technology at the end of the refresh period.
DEFAULT_RBER = 2e-4

# Chosen so that BCH(2312,2048,22) totals exactly 27% storage overhead.
DEFAULT_PERF_TIER_OVERHEAD = 0.1411

# Probability that the performance tier fails to correct an error, as quoted
# for the original design. Not applied unless perf_filter is set to it.
PERF_TIER_FILTER = 0.018

DEFAULT_CACHE_LINE_BYTES = 64
DEFAULT_DATA_BITS = 2048
REFERENCE_T = 22

DUE_FORMULAS = ('corrected', 'as-printed')
DUE_THRESHOLDS = ('strict', 'inclusive')
BLOCK_GRANULARITIES = ('cache-line', 'codeword')


@dataclass(frozen=True)
class MemoryConfig:
    rber: float = DEFAULT_RBER
    cache_line_bytes: int = DEFAULT_CACHE_LINE_BYTES
    block_bytes: int = DEFAULT_CACHE_LINE_BYTES
    perf_tier_overhead: float = DEFAULT_PERF_TIER_OVERHEAD
    perf_filter: float = 1.0
    due_formula: str = 'corrected'
    due_threshold: str = 'strict'
    block_granularity: str = 'cache-line'

    def __post_init__(self):
        if not isinstance(self.rber, (int, float)) or not 0.0 < self.rber < 1.0:
            raise ConfigurationError(f'rber: must lie in (0, 1), got {self.rber!r}')
        if not isinstance(self.cache_line_bytes, int) or self.cache_line_bytes < 1:
            raise ConfigurationError(f'cache_line_bytes: must be a positive integer, got {self.cache_line_bytes!r}')
        if not isinstance(self.block_bytes, int) or self.block_bytes < 1:
            raise ConfigurationError(f'block_bytes: must be a positive integer, got {self.block_bytes!r}')
        if self.block_bytes % self.cache_line_bytes != 0:
            raise ConfigurationError(
                f'block_bytes: must be a multiple of cache_line_bytes ({self.cache_line_bytes}), got {self.block_bytes}'
            )
        if not isinstance(self.perf_tier_overhead, (int, float)) or not self.perf_tier_overhead >= 0.0 \
                or math.isinf(self.perf_tier_overhead):
            raise ConfigurationError(f'perf_tier_overhead: must be a finite number >= 0, got {self.perf_tier_overhead!r}')
        if not isinstance(self.perf_filter, (int, float)) or not 0.0 < self.perf_filter <= 1.0:
            raise ConfigurationError(f'perf_filter: must lie in (0, 1], got {self.perf_filter!r}')
        if self.due_formula not in DUE_FORMULAS:
            raise ConfigurationError(f'due_formula: must be one of {DUE_FORMULAS}, got {self.due_formula!r}')
        if self.due_threshold not in DUE_THRESHOLDS:
            raise ConfigurationError(f'due_threshold: must be one of {DUE_THRESHOLDS}, got {self.due_threshold!r}')
        if self.block_granularity not in BLOCK_GRANULARITIES:
            raise ConfigurationError(
                f'block_granularity: must be one of {BLOCK_GRANULARITIES}, got {self.block_granularity!r}'
            )

    @property
    def lines_per_block(self):
        return self.block_bytes // self.cache_line_bytes

    def codewords_per_block(self, k):
        # A block smaller than one codeword still needs that whole codeword decoded.
        return max(1, -(-self.block_bytes * 8 // k))

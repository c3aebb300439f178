# coding: utf-8
"""
Cache-line failure probabilities of the storage-optimized tier and the
storage overhead of the two-tier design.

An access fails when the BCH codeword carries more errors than the code can
correct. That uncorrectable tail splits into the share the decoder flags
(DUE) and the share it silently miscorrects (NDE):

p_c,due = f * P(Binomial(n, RBER) >= t + 1) * (1 - q)
p_c,nde = f * P(Binomial(n, RBER) >= t + 1) * q
"""
import math

from ramp.exceptions import DomainError
from ramp.numerics.binomial import log_binomial_tail
from ramp.numerics.log_prob import LogProb


def _threshold(code, cfg):
    if cfg.due_threshold == 'inclusive':
        return code.t
    return code.t + 1


def uncorrectable_tail(code, cfg):
    """
    ln P(more errors than the code corrects) before the perf-tier filter.

    The 'as-printed' formula weights every term by RBER^i * RBER^(n - i),
    i.e. RBER^n * sum_{i >= j} C(n, i); the binomial-coefficient sum is
    2^n * P(Binomial(n, 1/2) >= j).
    """
    threshold = _threshold(code, cfg)
    if cfg.due_formula == 'as-printed':
        log_coefficients = code.n * math.log(2.0) + log_binomial_tail(code.n, threshold, 0.5)
        return LogProb(min(0.0, code.n * math.log(cfg.rber) + log_coefficients))
    return log_binomial_tail(code.n, threshold, cfg.rber)


def cache_line_due(code, cfg):
    q = code.q_miscorrect
    if q >= 1.0:
        return LogProb(-math.inf)
    return LogProb(math.log(cfg.perf_filter) + uncorrectable_tail(code, cfg) + math.log1p(-q))


def cache_line_nde(code, cfg):
    if code.t < 1:
        raise DomainError(f'{code.label} has no decoder, so nothing can be miscorrected')
    q = code.q_miscorrect
    if q == 0.0:
        return LogProb(-math.inf)
    return LogProb(math.log(cfg.perf_filter) + uncorrectable_tail(code, cfg) + math.log(q))


def storage_overhead(code, cfg):
    return cfg.perf_tier_overhead + code.check_bits / code.k

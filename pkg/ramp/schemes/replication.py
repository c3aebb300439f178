# coding: utf-8
"""
Logical-block failure probabilities and read amplification of the
replication schemes.

Primary-backup reads the replicas one after another and stops at the first
block that does not raise a DUE. An (N, K) erasure code reads fragments
until K of them come back without a DUE. A block with an NDE reads
"successfully", so it never triggers the fallback.

With per-block DUE probability p:

    PB:  p_lb,due = p^N
    EC:  p_lb,due = P(Binomial(N, p) >= N - K + 1)

a_r is the expected number of reads beyond the ones a clean logical read
costs (1 for primary-backup, K for erasure coding).
"""
import math

from ramp.exceptions import DomainError
from ramp.numerics.binomial import log1mexp
from ramp.numerics.binomial import log_binomial
from ramp.numerics.binomial import log_binomial_tail
from ramp.numerics.binomial import log_complement_power
from ramp.numerics.binomial import log_sum_exp
from ramp.numerics.log_prob import LogProb


EXTRA_READS_VARIANTS = ('as-printed', 'corrected')
DEFAULT_PB_VARIANT = 'as-printed'
DEFAULT_EC_VARIANT = 'corrected'


def _check_replicas(n, k=1):
    if not isinstance(n, int) or not isinstance(k, int) or k < 1 or n < k:
        raise DomainError(f'need integers N >= K >= 1, got N={n!r}, K={k!r}')


def _check_probability(p):
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise DomainError(f'p must lie in [0, 1], got {p!r}')
    return p


def _check_variant(variant):
    if variant not in EXTRA_READS_VARIANTS:
        raise DomainError(f'variant must be one of {EXTRA_READS_VARIANTS}, got {variant!r}')


def pb_logical_due(p_b, n):
    _check_replicas(n)
    return LogProb(n * float(p_b))


def pb_extra_reads(p_b, n, variant=DEFAULT_PB_VARIANT):
    """
    as-printed: -1 + sum_{i=0}^{N-1} p^i * (1 - p) * (i + 1)
    corrected:  sum_{j=1}^{N-1} p^j, i.e. with the all-N-fail outcome kept

    The printed sum telescopes to sum_{j=1}^{N-1} p^j - N * p^N, which is how
    it is evaluated here to avoid cancelling against the leading -1.
    """
    _check_replicas(n)
    _check_variant(variant)
    p = _check_probability(p_b)
    if n == 1:
        return 0.0

    terms = [p ** j for j in range(1, n)]
    if variant == 'as-printed':
        terms.append(-n * p ** n)
    return math.fsum(terms)


def ec_logical_due(p_b, n, k):
    _check_replicas(n, k)
    if k == n:
        raise DomainError(f'erasure coding needs N > K, got N={n}, K={k}')
    log_p = float(p_b)
    if log_p == -math.inf:
        return LogProb(-math.inf)

    log_q = log1mexp(log_p)
    terms = []
    for i in range(n - k + 1, n + 1):
        # Skip zero exponents so that -inf * 0 never turns into NaN.
        log_term = log_binomial(n, i)
        if i:
            log_term += i * log_p
        if n - i:
            log_term += (n - i) * log_q
        terms.append(log_term)

    if len(terms) == 1:
        return LogProb(terms[0])
    return LogProb(log_sum_exp(terms))


def ec_extra_reads(p_b, n, k, variant=DEFAULT_EC_VARIANT):
    """
    as-printed:
        -K + sum_{i=0}^{N-K} C(N, K+i) * C(K+i-1, i) * p^i * (1-p)^(K-1) * (K+i)

    corrected: the truncated negative-binomial expectation, with the
    exhausted outcome (all N read, logical read fails) included. The reader
    has read more than m blocks exactly when fewer than K of the first m
    were DUE-free, so

        a_r = sum_{m=K}^{N-1} P(Binomial(m, p) >= m - K + 1)
    """
    _check_replicas(n, k)
    if k == n:
        raise DomainError(f'erasure coding needs N > K, got N={n}, K={k}')
    _check_variant(variant)
    p = _check_probability(p_b)

    if variant == 'as-printed':
        terms = [-float(k)]
        for i in range(n - k + 1):
            terms.append(math.comb(n, k + i) * math.comb(k + i - 1, i) * p ** i * (1.0 - p) ** (k - 1) * (k + i))
        return math.fsum(terms)

    return math.fsum(log_binomial_tail(m, m - k + 1, p).probability for m in range(k, n))


def logical_nde(p_due, p_nde, n, k=1):
    """
    Probability that a logical read returns silently corrupt data.

    Each physical block is independently DUE (p_d), NDE (p_n) or clean. The
    read finishes on its K-th DUE-free block after i DUEs, and the data is
    corrupt if any of those K blocks was an NDE:

        sum_{i=0}^{N-K} C(K+i-1, i) * p_d^i * [(1 - p_d)^K - (1 - p_d - p_n)^K]

    Both arguments are LogProb. Baseline is N = K = 1.
    """
    _check_replicas(n, k)
    log_pd = float(p_due)
    log_pn = float(p_nde)
    if log_pn == -math.inf or log_pd == 0.0:
        return LogProb(-math.inf)

    log_a = log1mexp(log_pd)
    # (1-p_d)^K - (1-p_d-p_n)^K = (1-p_d)^K * [1 - (1 - p_n/(1-p_d))^K]
    log_ratio = min(0.0, log_pn - log_a)
    log_bracket = k * log_a + log_complement_power(log_ratio, k)

    terms = []
    for i in range(n - k + 1):
        log_term = log_binomial(k + i - 1, i) + log_bracket
        if i:
            log_term += i * log_pd
        terms.append(log_term)

    if len(terms) == 1:
        return LogProb(terms[0])
    return LogProb(log_sum_exp(terms))

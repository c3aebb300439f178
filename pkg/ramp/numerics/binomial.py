# coding: utf-8
"""
Binomial primitives in log space.

https://en.wikipedia.org/wiki/Binomial_distribution
https://en.wikipedia.org/wiki/LogSumExp

P(X >= j) = sum_{i=j}^{n} C(n, i) * p^i * (1 - p)^(n - i)

Above the mean the tail is summed upward from the threshold with the term
ratio

T(i + 1) / T(i) = (n - i) / (i + 1) * p / (1 - p)

which decreases in i, so once it drops below 1 the remainder is bounded by a
geometric series and the summation can stop early. At or below the mean the
lower tail is summed downward instead and complemented. The log-terms are
collected and reduced with a single logsumexp.
"""
import math

from scipy.special import gammaln
from scipy.special import logsumexp

from ramp.exceptions import DomainError
from ramp.numerics.log_prob import LogProb


# Below this n the exact big-integer path is used; it doubles as the oracle.
EXACT_BINOMIAL_MAX_N = 64

# Up to this many factors the log of the falling factorial is summed directly,
# which keeps ln C(n, k) accurate when n is large and k is small.
DIRECT_SUM_MAX_K = 256

# Relative size of the geometric remainder bound at which the tail stops.
TAIL_STOP_RATIO = 1e-30
LN_TAIL_STOP_RATIO = math.log(TAIL_STOP_RATIO)


def _check_probability(p):
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise DomainError(f'p must lie in [0, 1], got {p!r}')
    return p


def log_binomial(n, k):
    if not isinstance(n, int) or not isinstance(k, int) or n < 0 or k < 0:
        raise DomainError(f'n and k must be non-negative integers, got n={n!r}, k={k!r}')
    if k > n:
        raise DomainError(f'k must not exceed n, got n={n}, k={k}')

    if n <= EXACT_BINOMIAL_MAX_N:
        return math.log(math.comb(n, k))

    k = min(k, n - k)
    if k <= DIRECT_SUM_MAX_K:
        return math.fsum(math.log(n - j) for j in range(k)) - float(gammaln(k + 1))

    return float(gammaln(n + 1) - gammaln(k + 1) - gammaln(n - k + 1))


def log1mexp(log_p):
    """
    ln(1 - exp(log_p)) for log_p <= 0.

    https://cran.r-project.org/web/packages/Rmpfr/vignettes/log1mexp-note.pdf
    """
    log_p = float(log_p)
    if log_p > 0.0:
        raise DomainError(f'log_p must be <= 0, got {log_p!r}')
    if log_p == 0.0:
        return -math.inf
    if log_p == -math.inf:
        return 0.0
    if log_p > -math.log(2.0):
        return math.log(-math.expm1(log_p))
    return math.log1p(-math.exp(log_p))


def log_sum_exp(terms):
    terms = [float(t) for t in terms]
    if not terms:
        raise DomainError('log_sum_exp needs at least one term')
    if max(terms) == -math.inf:
        return -math.inf
    return float(logsumexp(terms))


def _log_terms_sum(n, start, direction, log_p, log_q):
    """
    ln sum of T(start), T(start + direction), ... while the terms matter.

    Both term ratios, T(i + 1) / T(i) going up and T(i - 1) / T(i) going
    down, shrink as the walk moves on, so the geometric remainder bound holds
    from the first ratio below 1.
    """
    log_odds = log_p - log_q
    i = start
    log_term = log_binomial(n, i) + i * log_p + (n - i) * log_q
    log_terms = [log_term]
    log_peak = log_term
    while 0 <= i + direction <= n:
        if direction > 0:
            log_ratio = math.log((n - i) / (i + 1)) + log_odds
        else:
            log_ratio = math.log(i / (n - i + 1)) - log_odds
        if log_ratio < 0.0:
            log_remainder_bound = log_term + log_ratio - math.log(-math.expm1(log_ratio))
            if log_remainder_bound < log_peak + LN_TAIL_STOP_RATIO:
                break
        log_term += log_ratio
        log_terms.append(log_term)
        log_peak = max(log_peak, log_term)
        i += direction

    return log_sum_exp(log_terms)


def log_binomial_tail_from_log(n, threshold, log_p):
    """
    ln P(X >= threshold) for X ~ Binomial(n, exp(log_p)).

    A threshold at or below the mean leaves a tail of at least about 1/2, which
    is taken as the complement of the lower tail P(X <= threshold - 1).
    """
    if not isinstance(n, int) or n < 0:
        raise DomainError(f'n must be a non-negative integer, got {n!r}')
    if not isinstance(threshold, int) or not 0 <= threshold <= n + 1:
        raise DomainError(f'threshold must lie in [0, n + 1], got {threshold!r}')
    log_p = float(log_p)
    if math.isnan(log_p) or log_p > 0.0:
        raise DomainError(f'log_p must be <= 0, got {log_p!r}')

    if threshold == 0:
        return LogProb(0.0)
    if threshold > n or log_p == -math.inf:
        return LogProb(-math.inf)
    if log_p == 0.0:
        return LogProb(0.0)

    log_q = log1mexp(log_p)
    if threshold <= n * math.exp(log_p):
        log_lower = _log_terms_sum(n, threshold - 1, -1, log_p, log_q)
        return LogProb(log1mexp(min(0.0, log_lower)))

    log_total = _log_terms_sum(n, threshold, 1, log_p, log_q)
    return LogProb(min(0.0, log_total))


def log_binomial_tail(n, threshold, p):
    p = _check_probability(p)
    log_p = -math.inf if p == 0.0 else math.log(p)
    return log_binomial_tail_from_log(n, threshold, log_p)


def complement_power(p, m):
    """
    1 - (1 - p)^m evaluated as -expm1(m * log1p(-p)).
    """
    p = _check_probability(p)
    if not isinstance(m, int) or m < 1:
        raise DomainError(f'm must be a positive integer, got {m!r}')
    if m == 1 or p == 0.0:
        return p
    if p == 1.0:
        return 1.0
    return -math.expm1(m * math.log1p(-p))


def log_complement_power(log_p, m):
    """
    ln(1 - (1 - p)^m) with p = exp(log_p); stays finite where p underflows.
    """
    log_p = float(log_p)
    if not isinstance(m, int) or m < 1:
        raise DomainError(f'm must be a positive integer, got {m!r}')
    if log_p > 0.0:
        raise DomainError(f'log_p must be <= 0, got {log_p!r}')
    if m == 1 or log_p == -math.inf or log_p == 0.0:
        return LogProb(log_p)
    # 1 - (1 - p)^m = m * p * (1 - O(m * p)); the correction is below double
    # precision long before exp(log_p) underflows.
    if log_p < -600.0:
        return LogProb(log_p + math.log(m))
    return LogProb(math.log(-math.expm1(m * log1mexp(log_p))))

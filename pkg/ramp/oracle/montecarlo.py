# coding: utf-8
"""
Seeded Monte Carlo fault injection.

Trials run in fixed-size chunks. Chunk i draws from its own counter-based
Philox stream keyed by SeedSequence(seed, spawn_key=(i,)), and chunks only
report integer counters, so the totals are the same for any number of
workers and any completion order.
"""
from concurrent.futures import ProcessPoolExecutor
import functools
import logging
import math

import numpy as np

from ramp.codes.cache_line import cache_line_due
from ramp.codes.cache_line import cache_line_nde
from ramp.codes.memory import MemoryConfig
from ramp.exceptions import OracleError
from ramp.oracle.enumeration import MAX_REPLICAS
from ramp.oracle.enumeration import enumerate_scheme
from ramp.oracle.verdict import DEFAULT_Z_THRESHOLD
from ramp.oracle.verdict import mean_verdict
from ramp.oracle.verdict import proportion_verdict


logger = logging.getLogger(__name__)

CHUNK_TRIALS = 1 << 18
MIN_SCHEME_TRIALS = 10_000
MIN_EXPECTED_BIT_ERRORS = 100

_DUE, _NDE = 1, 2


def _check_seed(seed):
    if not isinstance(seed, int) or isinstance(seed, bool) or seed < 0:
        raise OracleError(f'seed must be a non-negative integer, got {seed!r}')


def chunk_generator(seed, chunk):
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(entropy=seed, spawn_key=(chunk,))))


def _chunks(trials):
    return [(i, min(CHUNK_TRIALS, trials - i * CHUNK_TRIALS)) for i in range(math.ceil(trials / CHUNK_TRIALS))]


def _run_chunks(simulate, trials, workers):
    chunks = _chunks(trials)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            counters = list(executor.map(simulate, chunks))
    else:
        counters = [simulate(chunk) for chunk in chunks]
    # Python ints, summed in chunk order.
    return [sum(int(c[j]) for c in counters) for j in range(len(counters[0]))]


def _simulate_scheme_chunk(p_due, p_nde, n, k, seed, chunk):
    index, size = chunk
    rng = chunk_generator(seed, index)
    u = rng.random((size, n))
    outcome = np.where(u < p_due, _DUE, np.where(u < p_due + p_nde, _NDE, 0))

    good = np.cumsum(outcome != _DUE, axis=1)
    success = good[:, -1] >= k
    # First position holding the K-th DUE-free block; all N are read on failure.
    reads = np.where(success, np.argmax(good >= k, axis=1) + 1, n)
    extra = (reads - k).astype(np.int64)
    logger.debug('scheme chunk %d: %d trials', index, size)
    return (
        int(np.count_nonzero(~success)),
        int(extra.sum()),
        int((extra * extra).sum()),
    )


def montecarlo_scheme(p_due, p_nde, scheme, trials, seed, z_threshold=DEFAULT_Z_THRESHOLD, workers=1):
    """
    Simulate the scheme's read procedure and compare logical DUE and a_r
    with the exact enumeration. Returns (p_lb_due verdict, a_r verdict).
    """
    if not isinstance(trials, int) or trials < MIN_SCHEME_TRIALS:
        raise OracleError(f'montecarlo_scheme needs at least {MIN_SCHEME_TRIALS} trials, got {trials!r}')
    _check_seed(seed)
    if scheme.n > MAX_REPLICAS:
        raise OracleError(f'montecarlo_scheme compares against enumeration, which handles N <= {MAX_REPLICAS}')
    exact = enumerate_scheme(p_due, p_nde, scheme)

    simulate = functools.partial(_simulate_scheme_chunk, float(p_due), float(p_nde), scheme.n, scheme.k, seed)
    failures, extra, extra_squares = _run_chunks(simulate, trials, workers)

    due = proportion_verdict(f'{scheme.label} p_lb_due', exact.p_lb_due, failures, trials, seed, z_threshold)
    reads = mean_verdict(f'{scheme.label} a_r', exact.a_r, extra, extra_squares, trials, seed, z_threshold)
    for verdict in (due, reads):
        if verdict.low_events:
            logger.warning('%s: fewer than 10 expected events in %d trials', verdict.name, trials)
    logger.info('montecarlo %s at p_due=%g: p_lb_due z=%.2f, a_r z=%.2f', scheme.label, float(p_due), due.z_score, reads.z_score)
    return due, reads


def _simulate_bits_chunk(n, t, rber, q, seed, chunk):
    index, size = chunk
    rng = chunk_generator(seed, index)
    errors = rng.binomial(n, rber, size=size)
    miscorrected = rng.random(size) < q
    uncorrectable = errors > t
    return (
        int(np.count_nonzero(uncorrectable & ~miscorrected)),
        int(np.count_nonzero(uncorrectable & miscorrected)),
    )


def analytic_bits(code, rber):
    """
    (p_c_due, p_c_nde) of one codeword read from the cache-line model, with
    no perf-tier filter.
    """
    cfg = MemoryConfig(rber=rber)
    p_c_due = cache_line_due(code, cfg).probability
    if code.t < 1:
        return p_c_due, 0.0
    return p_c_due, cache_line_nde(code, cfg).probability


def montecarlo_bits(code, rber, trials, seed, z_threshold=DEFAULT_Z_THRESHOLD, workers=1):
    """
    Draw the error count of each codeword read and classify it: up to t
    errors are corrected, beyond that the read is an NDE with probability
    q_miscorrect and a DUE otherwise. Returns (p_c_due verdict, p_c_nde verdict).
    """
    rber = float(rber)
    if not 0.0 < rber < 1.0:
        raise OracleError(f'rber must lie in (0, 1), got {rber!r}')
    if not isinstance(trials, int) or trials < 1:
        raise OracleError(f'trials must be a positive integer, got {trials!r}')
    _check_seed(seed)
    if rber * code.n * trials < MIN_EXPECTED_BIT_ERRORS:
        raise OracleError(
            f'rber * n * trials = {rber * code.n * trials:.3g} bit errors expected; '
            f'raise rber or trials to reach {MIN_EXPECTED_BIT_ERRORS}'
        )

    p_c_due, p_c_nde = analytic_bits(code, rber)
    simulate = functools.partial(_simulate_bits_chunk, code.n, code.t, rber, code.q_miscorrect, seed)
    due_count, nde_count = _run_chunks(simulate, trials, workers)

    due = proportion_verdict(f'{code.label} p_c_due', p_c_due, due_count, trials, seed, z_threshold)
    nde = proportion_verdict(f'{code.label} p_c_nde', p_c_nde, nde_count, trials, seed, z_threshold)
    for verdict in (due, nde):
        if verdict.low_events:
            logger.warning('%s: fewer than 10 expected events in %d trials', verdict.name, trials)
    return due, nde

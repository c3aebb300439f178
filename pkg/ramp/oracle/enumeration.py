# coding: utf-8
"""
Exact read-procedure outcomes with rational arithmetic.

Every physical block is independently OK, DUE or NDE. A logical read walks
the blocks in order until K of them come back without a DUE (K = 1 for
primary-backup); if the blocks run out first the logical read is a DUE.
An NDE block reads "successfully" and hands back corrupt data.

The default mode merges read paths by prefix class (blocks read, DUE-free
blocks so far, corrupt so far), which keeps N = 20 cheap. The exhaustive
mode walks all 3^N outcome vectors and is only there to check the first.
"""
from dataclasses import dataclass
import enum
from fractions import Fraction
import itertools
import logging
from typing import NamedTuple

from ramp.exceptions import OracleError


logger = logging.getLogger(__name__)

MAX_REPLICAS = 20
MAX_EXHAUSTIVE_REPLICAS = 10


class BlockOutcome(enum.Enum):
    OK = 'ok'
    DUE = 'due'
    NDE = 'nde'


class ReadResult(enum.Enum):
    SUCCESS = 'success'
    DUE = 'due'
    NDE = 'nde'


@dataclass(frozen=True)
class TrialOutcome:
    blocks_read: int
    result: ReadResult
    outcomes: tuple


class Enumeration(NamedTuple):
    p_lb_due: Fraction
    a_r: Fraction
    p_any_nde: Fraction
    total: Fraction


def read_logical_block(outcomes, k=1):
    """
    Play the read procedure over one outcome vector.
    """
    good = 0
    corrupt = False
    for blocks_read, outcome in enumerate(outcomes, start=1):
        if outcome is BlockOutcome.DUE:
            continue
        good += 1
        corrupt = corrupt or outcome is BlockOutcome.NDE
        if good == k:
            return TrialOutcome(blocks_read, ReadResult.NDE if corrupt else ReadResult.SUCCESS, tuple(outcomes))
    return TrialOutcome(len(outcomes), ReadResult.DUE, tuple(outcomes))


def _block_probabilities(p_due, p_nde):
    p_due, p_nde = Fraction(p_due), Fraction(p_nde)
    if not 0 <= p_due <= 1 or not 0 <= p_nde <= 1 or p_due + p_nde > 1:
        raise OracleError(f'need p_due, p_nde >= 0 with p_due + p_nde <= 1, got {p_due}, {p_nde}')
    return {
        BlockOutcome.OK: 1 - p_due - p_nde,
        BlockOutcome.DUE: p_due,
        BlockOutcome.NDE: p_nde,
    }


def _enumerate_paths(probability, n, k):
    p_lb_due = Fraction(0)
    p_any_nde = Fraction(0)
    reads = Fraction(0)
    total = Fraction(0)

    # (DUE-free blocks, corrupt) -> probability, after `read` blocks.
    frontier = {(0, False): Fraction(1)}
    for read in range(1, n + 1):
        next_frontier = {}
        for (good, corrupt), weight in frontier.items():
            for outcome, p in probability.items():
                if p == 0:
                    continue
                if outcome is BlockOutcome.DUE:
                    state = (good, corrupt)
                else:
                    state = (good + 1, corrupt or outcome is BlockOutcome.NDE)

                if state[0] == k:
                    total += weight * p
                    reads += weight * p * read
                    if state[1]:
                        p_any_nde += weight * p
                else:
                    next_frontier[state] = next_frontier.get(state, Fraction(0)) + weight * p
        frontier = next_frontier

    for weight in frontier.values():
        total += weight
        reads += weight * n
        p_lb_due += weight

    return Enumeration(p_lb_due=p_lb_due, a_r=reads - k, p_any_nde=p_any_nde, total=total)


def _enumerate_vectors(probability, n, k):
    p_lb_due = Fraction(0)
    p_any_nde = Fraction(0)
    reads = Fraction(0)
    total = Fraction(0)

    for outcomes in itertools.product(list(BlockOutcome), repeat=n):
        weight = Fraction(1)
        for outcome in outcomes:
            weight *= probability[outcome]
        trial = read_logical_block(outcomes, k)
        total += weight
        reads += weight * trial.blocks_read
        if trial.result is ReadResult.DUE:
            p_lb_due += weight
        elif trial.result is ReadResult.NDE:
            p_any_nde += weight

    return Enumeration(p_lb_due=p_lb_due, a_r=reads - k, p_any_nde=p_any_nde, total=total)


def enumerate_scheme(p_due, p_nde, scheme, exhaustive=False):
    if scheme.n > MAX_REPLICAS:
        raise OracleError(f'exact enumeration handles N <= {MAX_REPLICAS}, got N={scheme.n}')
    if exhaustive and scheme.n > MAX_EXHAUSTIVE_REPLICAS:
        raise OracleError(f'exhaustive enumeration handles N <= {MAX_EXHAUSTIVE_REPLICAS}, got N={scheme.n}')

    probability = _block_probabilities(p_due, p_nde)
    if exhaustive:
        result = _enumerate_vectors(probability, scheme.n, scheme.k)
    else:
        result = _enumerate_paths(probability, scheme.n, scheme.k)

    logger.debug('enumerated %s at p_due=%s: p_lb_due=%s', scheme.label, float(p_due), float(result.p_lb_due))
    return result

# coding: utf-8
"""
BCH code parameterization.
https://en.wikipedia.org/wiki/BCH_code

BCH(n, k, t) protects k data bits with t * (ceil(log2(k)) + 1) check bits and
corrects up to t bit errors:

n = k + t * (ceil(log2(k)) + 1)

No Galois-field encoding or decoding happens here; only the lengths and the
miscorrection estimate that the reliability model needs.
"""
from dataclasses import dataclass
from dataclasses import field
from fractions import Fraction
import functools
import math

from ramp.exceptions import DomainError
from ramp.numerics.binomial import log_binomial
from ramp.numerics.binomial import log_sum_exp


# Syndrome spaces up to this many bits are counted exactly with big integers.
EXACT_SYNDROME_MAX_BITS = 1024


def check_bits_per_error(k):
    # (k - 1).bit_length() is ceil(log2(k)) without going through floats.
    return (k - 1).bit_length() + 1


def codeword_length(k, t):
    return k + t * check_bits_per_error(k)


@dataclass(frozen=True)
class CodeSpec:
    k: int
    t: int
    n: int = field(init=False)
    q_miscorrect: float = field(init=False)

    def __post_init__(self):
        if not isinstance(self.k, int) or self.k < 2:
            raise DomainError(f'k must be an integer >= 2, got {self.k!r}')
        if not isinstance(self.t, int) or self.t < 0:
            raise DomainError(f't must be a non-negative integer, got {self.t!r}')
        # frozen dataclass: derived fields go through object.__setattr__().
        object.__setattr__(self, 'n', codeword_length(self.k, self.t))
        q = 0.0 if self.t == 0 else _syndrome_sphere_fraction(self.n, self.k, self.t)
        object.__setattr__(self, 'q_miscorrect', q)

    @property
    def check_bits(self):
        return self.n - self.k

    @property
    def label(self):
        return f'BCH({self.n},{self.k},{self.t})'

    def __str__(self):
        return self.label


def bch_codeword_length(k, t):
    return CodeSpec(k=k, t=t)


@functools.lru_cache(maxsize=None)
def _syndrome_sphere_fraction(n, k, t):
    """
    Share of the 2^(n - k) syndromes claimed by the radius-t decoding spheres:

    q = min(1, sum_{i=0}^{t} C(n, i) / 2^(n - k))

    An uncorrectable pattern whose syndrome lands inside some sphere is
    "corrected" to the wrong codeword and slips through silently.
    """
    if n - k <= EXACT_SYNDROME_MAX_BITS:
        claimed = sum(math.comb(n, i) for i in range(t + 1))
        return float(min(Fraction(1), Fraction(claimed, 2 ** (n - k))))

    log_claimed = log_sum_exp([log_binomial(n, i) for i in range(t + 1)])
    return min(1.0, math.exp(log_claimed - (n - k) * math.log(2.0)))


def miscorrection_fraction(code):
    if code.t < 1:
        raise DomainError(f'{code.label} has no decoding spheres (t = 0)')
    return _syndrome_sphere_fraction(code.n, code.k, code.t)

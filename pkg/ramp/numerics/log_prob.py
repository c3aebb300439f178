# coding: utf-8
"""
Probabilities carried as natural logarithms.

The model's quantities range from ~1e-5 down to ~1e-40 and beyond, so every
probability travels as ln(p) and is only turned back into a linear value at
report boundaries. -inf encodes an exact zero.
"""
import math

from ramp.exceptions import DomainError


LN10 = math.log(10.0)

# Rounding in a log-sum of probabilities that add up to one can land a hair
# above zero.
_POSITIVE_SLACK = 1e-12


class LogProb(float):
    __slots__ = ()

    def __new__(cls, value):
        value = float(value)
        if math.isnan(value):
            raise DomainError('log-probability is NaN')
        if value > 0.0:
            if value > _POSITIVE_SLACK:
                raise DomainError(f'log-probability must be <= 0, got {value!r}')
            value = 0.0
        return super().__new__(cls, value)

    @classmethod
    def from_probability(cls, p):
        p = float(p)
        if not 0.0 <= p <= 1.0:
            raise DomainError(f'probability must lie in [0, 1], got {p!r}')
        if p == 0.0:
            return cls(-math.inf)
        return cls(math.log(p))

    @property
    def probability(self):
        return math.exp(self)

    @property
    def log10(self):
        return float(self) / LN10

    def is_zero(self):
        return float(self) == -math.inf

    def __repr__(self):
        return f'LogProb({float(self)!r})'


ZERO = LogProb(-math.inf)
ONE = LogProb(0.0)


def format_probability(log_p, digits=3):
    """
    Render exp(log_p) in scientific notation without ever forming the linear
    value, so 1e-400 prints as 1.000e-400 instead of 0.
    """
    if float(log_p) == -math.inf:
        return '0'
    log10_value = float(log_p) / LN10
    exponent = math.floor(log10_value)
    mantissa = 10 ** (log10_value - exponent)
    # 9.9996 rounds up to 10.000 at three digits.
    if round(mantissa, digits) >= 10.0:
        mantissa /= 10.0
        exponent += 1
    return f'{mantissa:.{digits}f}e{exponent:+03d}'

# coding: utf-8
"""
Empirical estimate versus analytic value.

With enough expected events the verdict is a two-sided z-test. Below
LOW_EVENTS expected events the normal approximation breaks down, so a count
verdict is decided by the exact binomial tail at the significance level
that matches the z threshold instead.
"""
from dataclasses import dataclass
import math

from scipy.stats import binom
from scipy.stats import norm
from scipy.stats import poisson


DEFAULT_Z_THRESHOLD = 4.0
LOW_EVENTS = 10


def significance(z_threshold):
    # Two-sided tail mass beyond z_threshold standard deviations.
    return float(2.0 * norm.sf(z_threshold))


@dataclass(frozen=True)
class ValidationVerdict:
    name: str
    analytic: float
    estimate: float
    standard_error: float
    z_score: float
    passed: bool
    trials: int
    seed: int
    low_events: bool = False
    method: str = 'z-test'

    def to_dict(self):
        return {
            'name': self.name,
            'analytic': self.analytic,
            'estimate': self.estimate,
            'standard_error': self.standard_error,
            'z_score': self.z_score if math.isfinite(self.z_score) else None,
            'passed': self.passed,
            'trials': self.trials,
            'seed': self.seed,
            'low_events': self.low_events,
            'method': self.method,
        }


def _z_score(estimate, analytic, standard_error):
    if standard_error == 0.0:
        return 0.0 if estimate == analytic else math.inf
    return (estimate - analytic) / standard_error


def proportion_verdict(name, analytic, count, trials, seed, z_threshold=DEFAULT_Z_THRESHOLD):
    """
    count events out of trials Bernoulli(analytic) draws.
    """
    analytic = float(analytic)
    estimate = count / trials
    standard_error = math.sqrt(analytic * (1.0 - analytic) / trials)
    z_score = _z_score(estimate, analytic, standard_error)
    low_events = analytic * trials < LOW_EVENTS

    if standard_error == 0.0:
        return ValidationVerdict(name, analytic, estimate, 0.0, z_score, estimate == analytic, trials, seed,
                                 low_events, method='exact')

    if low_events:
        # Doubled smaller tail of Binomial(trials, analytic) at the observed count.
        lower = float(binom.cdf(count, trials, analytic))
        upper = float(binom.sf(count - 1, trials, analytic))
        p_value = min(1.0, 2.0 * min(lower, upper))
        passed = p_value >= significance(z_threshold)
        return ValidationVerdict(name, analytic, estimate, standard_error, z_score, passed, trials, seed,
                                 low_events, method='exact-tail')

    return ValidationVerdict(name, analytic, estimate, standard_error, z_score, abs(z_score) <= z_threshold,
                             trials, seed, low_events)


def mean_verdict(name, analytic, total, total_squares, trials, seed, z_threshold=DEFAULT_Z_THRESHOLD):
    """
    Sample mean of a non-negative integer quantity from its sum and sum of
    squares, with the sample standard error.
    """
    analytic = float(analytic)
    estimate = total / trials
    variance = max(0.0, total_squares / trials - estimate * estimate)
    standard_error = math.sqrt(variance / trials)
    z_score = _z_score(estimate, analytic, standard_error)
    low_events = analytic * trials < LOW_EVENTS

    if analytic == 0.0 or (standard_error == 0.0 and not low_events):
        return ValidationVerdict(name, analytic, estimate, standard_error, z_score, estimate == analytic, trials, seed,
                                 low_events, method='exact')

    if low_events:
        # Rare extra reads arrive close to a Poisson process; test the total.
        expected = analytic * trials
        lower = float(poisson.cdf(total, expected))
        upper = float(poisson.sf(total - 1, expected))
        p_value = min(1.0, 2.0 * min(lower, upper))
        return ValidationVerdict(name, analytic, estimate, standard_error, z_score, p_value >= significance(z_threshold),
                                 trials, seed, low_events, method='exact-tail')

    return ValidationVerdict(name, analytic, estimate, standard_error, z_score, abs(z_score) <= z_threshold,
                             trials, seed, low_events)

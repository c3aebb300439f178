# coding: utf-8
"""
Parameter sweeps behind the storage-overhead / reliability trade-off plots.

raw mode evaluates one design point per axis value. overhead-at-target mode
runs the optimizer per axis value and records the cheapest code that still
meets the DUE (and optional NDE) target; values where no t <= t_max works
stay in the table, marked infeasible.
"""
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from dataclasses import replace
import functools
import logging

from ramp.codes.bch import CodeSpec
from ramp.codes.memory import DEFAULT_DATA_BITS
from ramp.codes.memory import REFERENCE_T
from ramp.exceptions import DomainError
from ramp.exceptions import InfeasibleError
from ramp.schemes.optimizer import DEFAULT_T_MAX
from ramp.schemes.optimizer import optimize
from ramp.schemes.report import analyze
from ramp.schemes.report import reference_due
from ramp.schemes.scheme import SchemeKind


logger = logging.getLogger(__name__)

AXES = ('t', 'block_bytes', 'N')
MODES = ('raw', 'overhead-at-target')


@dataclass(frozen=True)
class SweepRow:
    value: int
    feasible: bool = True
    t: int = None
    overhead_total: float = None
    p_lb_due: float = None
    p_b_nde: float = None
    a_r: float = None
    constraint: str = ''


@dataclass(frozen=True)
class SweepTable:
    axis: str
    mode: str
    scheme: object
    rows: tuple

    @property
    def values(self):
        return [row.value for row in self.rows]

    @property
    def overheads(self):
        return [row.overhead_total for row in self.rows]


@dataclass(frozen=True)
class _Point:
    axis: str
    mode: str
    cfg: object
    scheme: object
    k: int
    t: int
    target_due: float
    target_nde: float
    t_max: int
    a_r_variant: str


def _design_point(point, value):
    cfg, scheme, t = point.cfg, point.scheme, point.t
    if point.axis == 't':
        t = value
    elif point.axis == 'block_bytes':
        cfg = replace(cfg, block_bytes=value)
    else:
        scheme = scheme.with_replicas(value)
    return cfg, scheme, t


def _evaluate(point, value):
    cfg, scheme, t = _design_point(point, value)

    if point.mode == 'raw':
        report = analyze(CodeSpec(k=point.k, t=t), cfg, scheme, point.a_r_variant)
    else:
        try:
            report = optimize(
                cfg, scheme, point.target_due, point.target_nde,
                k=point.k, t_max=point.t_max, a_r_variant=point.a_r_variant,
            )
        except InfeasibleError as e:
            logger.warning('%s=%s is infeasible: %s', point.axis, value, e)
            return SweepRow(value=value, feasible=False, constraint=e.constraint)

    logger.debug('%s=%s evaluated: t=%d', point.axis, value, report.code.t)
    return SweepRow(
        value=value,
        t=report.code.t,
        overhead_total=report.overhead_total,
        p_lb_due=report.p_lb_due,
        p_b_nde=report.p_b_nde,
        a_r=report.a_r,
    )


def sweep(axis, values, cfg, scheme, mode='raw', k=DEFAULT_DATA_BITS, t=REFERENCE_T,
          target_due=None, target_nde=None, t_max=DEFAULT_T_MAX, a_r_variant=None, workers=1):
    """
    Rows come back ordered by axis value whatever the number of workers.
    In overhead-at-target mode target_due defaults to the DUE of the original
    chipkill design under cfg.
    """
    if axis not in AXES:
        raise DomainError(f'axis must be one of {AXES}, got {axis!r}')
    if mode not in MODES:
        raise DomainError(f'mode must be one of {MODES}, got {mode!r}')
    if mode == 'overhead-at-target' and axis == 't':
        raise DomainError('the t axis is what overhead-at-target mode optimizes; sweep it in raw mode')
    if axis == 'N' and scheme.kind is SchemeKind.BASELINE:
        raise DomainError('baseline has no replica count to sweep')

    values = list(values)
    if not values:
        raise DomainError(f'the {axis} sweep needs at least one value')
    if len(set(values)) != len(values):
        raise DomainError(f'the {axis} sweep has duplicate values: {values}')
    values = sorted(values)

    if mode == 'overhead-at-target' and target_due is None:
        target_due = reference_due(cfg, k)

    point = _Point(
        axis=axis, mode=mode, cfg=cfg, scheme=scheme, k=k, t=t,
        target_due=target_due, target_nde=target_nde, t_max=t_max, a_r_variant=a_r_variant,
    )
    evaluate = functools.partial(_evaluate, point)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            rows = list(executor.map(evaluate, values))
    else:
        rows = [evaluate(value) for value in values]

    logger.info('%s sweep over %s: %d rows, %d infeasible', scheme.label, axis, len(rows),
                sum(1 for row in rows if not row.feasible))
    return SweepTable(axis=axis, mode=mode, scheme=scheme, rows=tuple(rows))

# coding: utf-8
"""
Run configuration: one JSON file merged over built-in defaults, then
command-line flags on top.

Every section is checked against its known keys, and errors name the dotted
path of the offending field (memory.rber, sweep.range.step, ...).
"""
import copy
from dataclasses import dataclass
import hashlib
import json
import logging
import math

from ramp.codes.bch import CodeSpec
from ramp.codes.memory import MemoryConfig
from ramp.exceptions import ConfigurationError
from ramp.exceptions import DomainError
from ramp.numerics.log_prob import LogProb
from ramp.schemes.optimizer import DEFAULT_T_MAX
from ramp.schemes.report import reference_due
from ramp.schemes.scheme import Scheme
from ramp.schemes.scheme import SchemeKind
from ramp.schemes.sweep import AXES
from ramp.schemes.sweep import MODES


logger = logging.getLogger(__name__)

FORMATS = ('json', 'text', 'csv')

DEFAULTS = {
    'memory': {
        'rber': 2e-4,
        'cache_line_bytes': 64,
        'block_bytes': 64,
        'perf_tier_overhead': 0.1411,
        'perf_filter': 1.0,
        'due_formula': 'corrected',
        'due_threshold': 'strict',
        'block_granularity': 'cache-line',
    },
    'code': {'k': 2048, 't': 22},
    'schemes': [{'kind': 'baseline'}],
    'targets': {'due': 'reference', 'nde': None, 'reference_t': 22},
    'sweep': None,
    'optimizer': {'t_max': DEFAULT_T_MAX, 'workers': 1},
    'oracle': {
        'trials': 1_000_000,
        'seed': 42,
        'z_threshold': 4.0,
        'workers': 1,
        'p_grid': [0.5, 0.1, 1e-3],
        'nde_ratio': 0.1,
        'bits': {'k': 64, 't': 2, 'rber': 0.01, 'trials': 1_000_000},
    },
    'output': {'format': None, 'path': None},
}

SWEEP_KEYS = ('axis', 'values', 'range', 'mode')
RANGE_KEYS = ('start', 'stop', 'step')
SCHEME_KEYS = ('kind', 'N', 'K')
TOP_LEVEL_KEYS = tuple(DEFAULTS) + ('scheme',)


@dataclass(frozen=True)
class SweepConfig:
    axis: str
    values: tuple
    mode: str = 'raw'


@dataclass(frozen=True)
class BitsConfig:
    k: int
    t: int
    rber: float
    trials: int

    @property
    def code(self):
        return CodeSpec(k=self.k, t=self.t)


@dataclass(frozen=True)
class OracleConfig:
    trials: int
    seed: int
    z_threshold: float
    workers: int
    p_grid: tuple
    nde_ratio: float
    bits: BitsConfig


@dataclass(frozen=True)
class RunConfig:
    memory: MemoryConfig
    k: int
    t: int
    schemes: tuple
    target_due: object
    target_nde: object
    reference_t: int
    sweep: SweepConfig
    t_max: int
    optimizer_workers: int
    oracle: OracleConfig
    output_format: str
    output_path: str
    merged: dict

    @property
    def code(self):
        return CodeSpec(k=self.k, t=self.t)

    def resolve_target_due(self):
        if self.target_due == 'reference':
            return reference_due(self.memory, self.k, self.reference_t)
        return LogProb.from_probability(self.target_due)

    def resolve_target_nde(self):
        if self.target_nde is None:
            return None
        return LogProb.from_probability(self.target_nde)

    @property
    def config_hash(self):
        canonical = json.dumps(self.merged, sort_keys=True, separators=(',', ':'))
        return hashlib.sha256(canonical.encode('utf-8')).hexdigest()


def _check_keys(path, section, allowed):
    if not isinstance(section, dict):
        raise ConfigurationError(f'{path}: must be an object, got {section!r}')
    unknown = sorted(set(section) - set(allowed))
    if unknown:
        prefix = f'{path}.' if path else ''
        raise ConfigurationError(f'{prefix}{unknown[0]}: unknown key (allowed: {", ".join(allowed)})')


def _integer(path, value, minimum=None):
    if not isinstance(value, int) or isinstance(value, bool):
        raise ConfigurationError(f'{path}: must be an integer, got {value!r}')
    if minimum is not None and value < minimum:
        raise ConfigurationError(f'{path}: must be >= {minimum}, got {value}')
    return value


def _number(path, value):
    if not isinstance(value, (int, float)) or isinstance(value, bool) or not math.isfinite(value):
        raise ConfigurationError(f'{path}: must be a finite number, got {value!r}')
    return float(value)


def _probability(path, value, upper_inclusive=True):
    value = _number(path, value)
    if not 0.0 < value < 1.0 and not (upper_inclusive and value == 1.0):
        interval = '(0, 1]' if upper_inclusive else '(0, 1)'
        raise ConfigurationError(f'{path}: must lie in {interval}, got {value!r}')
    return value


def merge(raw):
    """
    Overlay a parsed JSON document on DEFAULTS, rejecting unknown keys.
    """
    _check_keys('', raw, TOP_LEVEL_KEYS)
    if 'scheme' in raw and 'schemes' in raw:
        raise ConfigurationError('scheme: give either scheme or schemes, not both')

    merged = copy.deepcopy(DEFAULTS)
    for key, value in raw.items():
        if key == 'scheme':
            merged['schemes'] = [value]
        elif key in ('schemes', 'sweep'):
            merged[key] = value
        else:
            _check_keys(key, value, DEFAULTS[key])
            for field, field_value in value.items():
                if key == 'oracle' and field == 'bits':
                    _check_keys('oracle.bits', field_value, DEFAULTS['oracle']['bits'])
                    merged['oracle']['bits'].update(field_value)
                else:
                    merged[key][field] = field_value
    return merged


def apply_overrides(merged, seed=None, trials=None, output_format=None, out=None, t=None, perf_filter=None):
    merged = copy.deepcopy(merged)
    if seed is not None:
        merged['oracle']['seed'] = seed
    if trials is not None:
        merged['oracle']['trials'] = trials
        merged['oracle']['bits']['trials'] = trials
    if output_format is not None:
        merged['output']['format'] = output_format
    if out is not None:
        merged['output']['path'] = out
    if t is not None:
        merged['code']['t'] = t
    if perf_filter is not None:
        merged['memory']['perf_filter'] = perf_filter
    return merged


def parse_scheme(path, data):
    _check_keys(path, data, SCHEME_KEYS)
    kinds = [kind.value for kind in SchemeKind]
    if data.get('kind') not in kinds:
        raise ConfigurationError(f'{path}.kind: must be one of {kinds}, got {data.get("kind")!r}')
    kind = SchemeKind(data['kind'])
    n = _integer(f'{path}.N', data.get('N', 1))
    k = _integer(f'{path}.K', data.get('K', 1))
    try:
        return Scheme(kind, n=n, k=k)
    except DomainError as e:
        raise ConfigurationError(f'{path}: {e}')


def parse_sweep(data):
    _check_keys('sweep', data, SWEEP_KEYS)
    axis = data.get('axis')
    if axis not in AXES:
        raise ConfigurationError(f'sweep.axis: must be one of {AXES}, got {axis!r}')
    mode = data.get('mode', 'raw')
    if mode not in MODES:
        raise ConfigurationError(f'sweep.mode: must be one of {MODES}, got {mode!r}')

    if ('values' in data) == ('range' in data):
        raise ConfigurationError('sweep: give exactly one of values or range')
    if 'values' in data:
        if not isinstance(data['values'], list):
            raise ConfigurationError(f'sweep.values: must be a list, got {data["values"]!r}')
        values = [_integer(f'sweep.values[{i}]', v) for i, v in enumerate(data['values'])]
    else:
        bounds = data['range']
        _check_keys('sweep.range', bounds, RANGE_KEYS)
        start = _integer('sweep.range.start', bounds.get('start'))
        stop = _integer('sweep.range.stop', bounds.get('stop'))
        step = _integer('sweep.range.step', bounds.get('step', 1), minimum=1)
        values = list(range(start, stop + 1, step))

    if not values:
        raise ConfigurationError(f'sweep: the {axis} range is empty')
    if len(set(values)) != len(values):
        raise ConfigurationError(f'sweep.values: duplicate values in {values}')
    return SweepConfig(axis=axis, values=tuple(sorted(values)), mode=mode)


def build(merged):
    try:
        memory = MemoryConfig(**merged['memory'])
    except ConfigurationError as e:
        raise ConfigurationError(f'memory.{e}')
    except TypeError as e:
        raise ConfigurationError(f'memory: {e}')

    code = merged['code']
    k = _integer('code.k', code['k'], minimum=2)
    t = _integer('code.t', code['t'], minimum=0)

    schemes = merged['schemes']
    if not isinstance(schemes, list) or not schemes:
        raise ConfigurationError('schemes: must be a non-empty list')
    schemes = tuple(parse_scheme(f'schemes[{i}]', s) for i, s in enumerate(schemes))

    targets = merged['targets']
    target_due = targets['due']
    if target_due != 'reference':
        target_due = _probability('targets.due', target_due)
    target_nde = targets['nde']
    if target_nde is not None:
        target_nde = _probability('targets.nde', target_nde, upper_inclusive=False)
    reference_t = _integer('targets.reference_t', targets['reference_t'], minimum=0)

    sweep = parse_sweep(merged['sweep']) if merged['sweep'] is not None else None

    optimizer = merged['optimizer']
    t_max = _integer('optimizer.t_max', optimizer['t_max'], minimum=0)
    optimizer_workers = _integer('optimizer.workers', optimizer['workers'], minimum=1)

    oracle = merged['oracle']
    bits = oracle['bits']
    p_grid = oracle['p_grid']
    if not isinstance(p_grid, list) or not p_grid:
        raise ConfigurationError('oracle.p_grid: must be a non-empty list')
    oracle_config = OracleConfig(
        trials=_integer('oracle.trials', oracle['trials'], minimum=1),
        seed=_integer('oracle.seed', oracle['seed'], minimum=0),
        z_threshold=_number('oracle.z_threshold', oracle['z_threshold']),
        workers=_integer('oracle.workers', oracle['workers'], minimum=1),
        p_grid=tuple(_probability(f'oracle.p_grid[{i}]', p) for i, p in enumerate(p_grid)),
        nde_ratio=_number('oracle.nde_ratio', oracle['nde_ratio']),
        bits=BitsConfig(
            k=_integer('oracle.bits.k', bits['k'], minimum=2),
            t=_integer('oracle.bits.t', bits['t'], minimum=0),
            rber=_probability('oracle.bits.rber', bits['rber'], upper_inclusive=False),
            trials=_integer('oracle.bits.trials', bits['trials'], minimum=1),
        ),
    )
    if oracle_config.z_threshold <= 0:
        raise ConfigurationError(f'oracle.z_threshold: must be > 0, got {oracle_config.z_threshold}')
    if not 0.0 <= oracle_config.nde_ratio <= 1.0:
        raise ConfigurationError(f'oracle.nde_ratio: must lie in [0, 1], got {oracle_config.nde_ratio}')

    output = merged['output']
    if output['format'] is not None and output['format'] not in FORMATS:
        raise ConfigurationError(f'output.format: must be one of {FORMATS}, got {output["format"]!r}')
    if output['path'] is not None and not isinstance(output['path'], str):
        raise ConfigurationError(f'output.path: must be a string, got {output["path"]!r}')

    return RunConfig(
        memory=memory,
        k=k,
        t=t,
        schemes=schemes,
        target_due=target_due,
        target_nde=target_nde,
        reference_t=reference_t,
        sweep=sweep,
        t_max=t_max,
        optimizer_workers=optimizer_workers,
        oracle=oracle_config,
        output_format=output['format'],
        output_path=output['path'],
        merged=merged,
    )


def read_config_file(path):
    try:
        with open(path, encoding='utf-8') as f:
            return json.load(f)
    except OSError as e:
        raise ConfigurationError(f'{path}: cannot read config ({e.strerror})')
    except json.JSONDecodeError as e:
        raise ConfigurationError(f'{path}: invalid JSON at line {e.lineno} column {e.colno}: {e.msg}')


def load_run_config(path=None, **overrides):
    raw = read_config_file(path) if path else {}
    merged = apply_overrides(merge(raw), **overrides)
    run = build(merged)
    logger.info('loaded %s (sha256 %s)', path or 'built-in defaults', run.config_hash[:12])
    return run

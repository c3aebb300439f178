# coding: utf-8
"""
Renderers for the three output formats and the file writer.

Data files hold nothing that changes between identical runs; the tool
version, config hash and seed go to a sidecar <name>.meta.json instead.
"""
import csv
import io
import json
import logging
from pathlib import Path

from ramp import __version__
from ramp.numerics.log_prob import format_probability
from ramp.schemes.report import PROBABILITY_FIELDS


logger = logging.getLogger(__name__)

TOOL_NAME = 'ramp-reliability'


def percent(fraction):
    return f'{100 * fraction:.1f}%'


def log10_or_none(log_p):
    return None if log_p.is_zero() else log_p.log10


def probability_text(log_p):
    if log_p.is_zero():
        return '0 (log10 -inf)'
    return f'{format_probability(log_p)} (log10 {log_p.log10:.3f})'


def dump_json(data):
    return json.dumps(data, sort_keys=True, indent=2, allow_nan=False) + '\n'


def _aligned(pairs):
    width = max(len(name) for name, _ in pairs)
    return ''.join(f'{name.ljust(width)}  {value}\n' for name, value in pairs)


def report_text(report):
    pairs = [
        ('scheme', report.scheme.label),
        ('code', report.code.label),
        ('rber', f'{report.cfg.rber:g}'),
        ('block_bytes', str(report.cfg.block_bytes)),
        ('overhead_total', percent(report.overhead_total)),
    ]
    for name in PROBABILITY_FIELDS:
        pairs.append((name, probability_text(getattr(report, name))))
    variant = f' ({report.a_r_variant})' if report.a_r_variant else ''
    pairs.append(('a_r', f'{report.a_r:.6e}{variant}'))
    pairs.append(('relative_reads', f'{report.relative_reads:.6e}'))
    return _aligned(pairs)


def sweep_header(table):
    if table.mode == 'raw':
        return [table.axis, 'overhead_total', 'p_lb_due', 'p_lb_due_log10', 'p_b_nde', 'p_b_nde_log10', 'a_r']
    return [table.axis, 'overhead_at_target', 't', 'feasible', 'constraint']


def _log10_cell(log_p):
    value = log10_or_none(log_p)
    return '-inf' if value is None else f'{value:.6f}'


def sweep_records(table):
    """
    Rows of string cells, formatted once so every output is byte-stable.
    """
    records = []
    for row in table.rows:
        if table.mode == 'raw':
            records.append([
                str(row.value),
                f'{row.overhead_total:.6f}',
                format_probability(row.p_lb_due, digits=6),
                _log10_cell(row.p_lb_due),
                format_probability(row.p_b_nde, digits=6),
                _log10_cell(row.p_b_nde),
                f'{row.a_r:.6e}',
            ])
        elif row.feasible:
            records.append([str(row.value), f'{row.overhead_total:.6f}', str(row.t), 'true', ''])
        else:
            records.append([str(row.value), '', '', 'false', row.constraint])
    return records


def sweep_csv(table):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(sweep_header(table))
    writer.writerows(sweep_records(table))
    return buffer.getvalue()


def sweep_dict(table):
    rows = []
    for row in table.rows:
        data = {'value': row.value, 'feasible': row.feasible}
        if row.feasible:
            data.update({
                't': row.t,
                'overhead_total': row.overhead_total,
                'p_lb_due': row.p_lb_due.probability,
                'p_lb_due_log10': log10_or_none(row.p_lb_due),
                'p_b_nde': row.p_b_nde.probability,
                'p_b_nde_log10': log10_or_none(row.p_b_nde),
                'a_r': row.a_r,
            })
        else:
            data['constraint'] = row.constraint
        rows.append(data)
    return {'axis': table.axis, 'mode': table.mode, 'scheme': table.scheme.label, 'rows': rows}


def sweep_text(table):
    header = sweep_header(table)
    records = [['-' if cell == '' else cell for cell in record] for record in sweep_records(table)]
    widths = [max(len(cell) for cell in column) for column in zip(header, *records)]
    lines = [f'# {table.scheme.label}, {table.axis} sweep ({table.mode})']
    for record in [header] + records:
        lines.append('  '.join(cell.rjust(width) for cell, width in zip(record, widths)).rstrip())
    return '\n'.join(lines) + '\n'


def scheme_path(path, label):
    path = Path(path)
    return path.with_name(f'{path.stem}-{label}{path.suffix}')


def meta_path(path):
    path = Path(path)
    return path.with_name(f'{path.stem}.meta.json')


def write_data(path, text, run, command, scheme=None):
    """
    Write one data file and its sidecar metadata.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', encoding='utf-8', newline='') as f:
        f.write(text)

    meta = {
        'tool': TOOL_NAME,
        'version': __version__,
        'command': command,
        'config_sha256': run.config_hash,
        'seed': run.oracle.seed,
        'data_file': path.name,
    }
    if scheme is not None:
        meta['scheme'] = scheme.label
    with open(meta_path(path), 'w', encoding='utf-8', newline='') as f:
        f.write(dump_json(meta))
    logger.info('wrote %s', path)
    return path

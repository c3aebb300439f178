# coding: utf-8
"""
The four workflows behind the ramp subcommands. Each takes a RunConfig and
the stream data goes to, and returns the process exit code; exceptions are
left to ramp.cli.main to map onto exit codes.
"""
import logging

from ramp import __version__
from ramp.cli.output import dump_json
from ramp.cli.output import log10_or_none
from ramp.cli.output import percent
from ramp.cli.output import report_text
from ramp.cli.output import scheme_path
from ramp.cli.output import sweep_csv
from ramp.cli.output import sweep_dict
from ramp.cli.output import sweep_text
from ramp.cli.output import write_data
from ramp.codes.bch import CodeSpec
from ramp.codes.cache_line import storage_overhead
from ramp.exceptions import ConfigurationError
from ramp.oracle.formulas import check_formulas
from ramp.oracle.formulas import failed_checks
from ramp.oracle.montecarlo import montecarlo_bits
from ramp.oracle.montecarlo import montecarlo_scheme
from ramp.schemes.optimizer import optimize
from ramp.schemes.report import analyze
from ramp.schemes.sweep import sweep


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VALIDATION_FAILED = 1
EXIT_CONFIG = 2
EXIT_INFEASIBLE = 3
EXIT_ORACLE = 4


def _output_format(run, command, allowed, default):
    fmt = run.output_format or default
    if fmt not in allowed:
        raise ConfigurationError(f'output.format: {command} emits {" or ".join(allowed)}, got {fmt!r}')
    return fmt


def _emit(run, command, text, stdout):
    if run.output_path:
        write_data(run.output_path, text, run, command)
    else:
        stdout.write(text)


def cmd_analyze(run, stdout):
    fmt = _output_format(run, 'analyze', ('text', 'json'), 'text')
    reports = [analyze(run.code, run.memory, scheme) for scheme in run.schemes]

    if fmt == 'json':
        text = dump_json({'reports': [report.to_dict() for report in reports]})
    else:
        text = '\n'.join(report_text(report) for report in reports)
    _emit(run, 'analyze', text, stdout)
    return EXIT_OK


def cmd_sweep(run, stdout):
    if run.sweep is None:
        raise ConfigurationError('sweep: the sweep command needs a sweep section')
    fmt = _output_format(run, 'sweep', ('csv', 'json', 'text'), 'csv')
    settings = run.sweep

    target_due = target_nde = None
    if settings.mode != 'raw':
        target_due = run.resolve_target_due()
        target_nde = run.resolve_target_nde()

    tables = [
        sweep(
            settings.axis, settings.values, run.memory, scheme,
            mode=settings.mode, k=run.k, t=run.t,
            target_due=target_due, target_nde=target_nde,
            t_max=run.t_max, workers=run.optimizer_workers,
        )
        for scheme in run.schemes
    ]
    render = {
        'csv': sweep_csv,
        'json': lambda table: dump_json(sweep_dict(table)),
        'text': sweep_text,
    }[fmt]

    if run.output_path and len(tables) == 1:
        write_data(run.output_path, render(tables[0]), run, 'sweep', tables[0].scheme)
    elif run.output_path:
        for table in tables:
            write_data(scheme_path(run.output_path, table.scheme.label), render(table), run, 'sweep', table.scheme)
    elif fmt == 'json':
        stdout.write(dump_json({'tables': [sweep_dict(table) for table in tables]}))
    else:
        stdout.write('\n'.join(render(table) for table in tables))
    return EXIT_OK


def cmd_optimize(run, stdout):
    fmt = _output_format(run, 'optimize', ('text', 'json'), 'text')
    target_due = run.resolve_target_due()
    target_nde = run.resolve_target_nde()

    reference = CodeSpec(k=run.k, t=run.reference_t)
    reference_overhead = storage_overhead(reference, run.memory)

    results = []
    for scheme in run.schemes:
        report = optimize(run.memory, scheme, target_due, target_nde, k=run.k, t_max=run.t_max)
        results.append((report, reference_overhead - report.overhead_total))

    if fmt == 'json':
        text = dump_json({
            'reference_code': reference.label,
            'reference_overhead': reference_overhead,
            'target_due': target_due.probability,
            'target_due_log10': log10_or_none(target_due),
            'target_nde': run.target_nde,
            'results': [dict(report.to_dict(), savings=savings) for report, savings in results],
        })
    else:
        blocks = []
        for report, savings in results:
            summary = (
                f'savings: {percent(reference_overhead)} ({reference.label} baseline) -> '
                f'{percent(report.overhead_total)} at t={report.code.t}, '
                f'{100 * savings:.1f} percentage points\n'
            )
            blocks.append(report_text(report) + summary)
        text = '\n'.join(blocks)
    _emit(run, 'optimize', text, stdout)
    return EXIT_OK


def _extra_reads_table(checks):
    """
    Side by side view of both a_r variants against the enumerated value.
    """
    rows = {}
    for check in checks:
        if check.quantity != 'a_r' or not check.variant:
            continue
        row = rows.setdefault((check.scheme, check.p_due), {
            'scheme': check.scheme,
            'p_due': check.p_due,
            'exact': check.exact,
        })
        row[check.variant] = check.analytic
        row[f'{check.variant}_error'] = check.error
        row[f'{check.variant}_agrees'] = check.agrees
    return list(rows.values())


def cmd_validate(run, stdout):
    _output_format(run, 'validate', ('json',), 'json')
    oracle = run.oracle

    checks = check_formulas(oracle.p_grid, run.schemes, oracle.nde_ratio)
    verdicts = []
    for scheme in run.schemes:
        for p_due in oracle.p_grid:
            verdicts.extend(montecarlo_scheme(
                p_due, p_due * oracle.nde_ratio, scheme, oracle.trials, oracle.seed,
                z_threshold=oracle.z_threshold, workers=oracle.workers,
            ))
    bits = montecarlo_bits(
        oracle.bits.code, oracle.bits.rber, oracle.bits.trials, oracle.seed,
        z_threshold=oracle.z_threshold, workers=oracle.workers,
    )

    failed = failed_checks(checks) + [v for v in verdicts + list(bits) if not v.passed]
    for item in failed:
        logger.warning('validation failed: %s', item)
    diverging = [check for check in checks if not check.binding and not check.agrees]
    logger.info('%d formula checks, %d Monte Carlo verdicts, %d failures, %d as-printed divergences',
                len(checks), len(verdicts) + len(bits), len(failed), len(diverging))

    text = dump_json({
        'tool_version': __version__,
        'seed': oracle.seed,
        'trials': oracle.trials,
        'z_threshold': oracle.z_threshold,
        'passed': not failed,
        'formulas': [check.to_dict() for check in checks],
        'extra_reads_variants': _extra_reads_table(checks),
        'divergences': [check.to_dict() for check in diverging],
        'montecarlo': [verdict.to_dict() for verdict in verdicts],
        'bits': {'code': oracle.bits.code.label, 'rber': oracle.bits.rber,
                 'verdicts': [verdict.to_dict() for verdict in bits]},
    })
    _emit(run, 'validate', text, stdout)
    return EXIT_VALIDATION_FAILED if failed else EXIT_OK


COMMANDS = {
    'analyze': cmd_analyze,
    'sweep': cmd_sweep,
    'optimize': cmd_optimize,
    'validate': cmd_validate,
}

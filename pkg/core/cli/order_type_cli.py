'''
Copyright 2021 OpenDILab. All Rights Reserved:
Description: Command-line entry ``ordertype``: catalog inspection, spectra, table emission, verification of the
    published order-type coincidence, least-squares screening and certificate search.
'''
import argparse
import sys
from typing import Dict, List, Optional

import pandas as pd
import yaml
from easydict import EasyDict
from loguru import logger

from core.data import PUBLISHED_ROWS, Catalog, CatalogFormatError, CatalogLookupError, CatalogValidationError, \
    dump_catalog, format_id, load_catalog
from core.data.table_utils import catalog_frame, catalog_table, group_frame, grid_for, spectrum_frame, \
    valuation_frame
from core.eval import CertificateSearcher, TheoremEvaluator, STATUS_INFEASIBLE, STATUS_SOLVABLE_TARGET, \
    STATUS_VERIFIED
from core.groups import DEFAULT_ENUM_CAP, DEFAULT_MAX_NORMAL_CLOSURES, EnumerationCapError, \
    NormalSubgroupGuardError, PermutationError
from core.solver import CertificateError, SolverSoundnessError
from core.spectra import InconsistentSpectrumError, exponent_spectrum, order_spectrum, revolved_spectrum, \
    valuation_vector
from core.utils.data_utils.data_writter import dump_json, frame_records, frame_to_csv, frames_to_csv, write_text
from core.utils.others.config_helper import deep_merge_dicts, read_config

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 2
EXIT_INFEASIBLE = 3
EXIT_INPUT_ERROR = 4
EXIT_SOLVABLE_TARGET = 5

SEARCH_EXIT_CODES = {
    STATUS_VERIFIED: EXIT_OK,
    STATUS_INFEASIBLE: EXIT_INFEASIBLE,
    STATUS_SOLVABLE_TARGET: EXIT_SOLVABLE_TARGET,
}

FORMATS = ('csv', 'json', 'table')
DEFAULT_FORMATS = {
    'catalog list': 'csv',
    'catalog dump': 'json',
    'spectrum': 'csv',
    'verify-theorem': 'csv',
    'emit-tables': 'csv',
    'screen': 'json',
    'search': 'json',
}

run_config = dict(
    catalog=None,
    extra_corpus=None,
    command=None,
    format=None,
    out=None,
    enum_cap=DEFAULT_ENUM_CAP,
    max_normal_closures=DEFAULT_MAX_NORMAL_CLOSURES,
    grid=None,
    verbose=False,
    solver=dict(
        max_multiplicity=8,
        screen_tol=1e-4,
        iter_factor=10,
        normal_tol=1e-10,
        exclude_direct_products=False,
    ),
)

INPUT_ERRORS = (
    CatalogFormatError,
    CatalogValidationError,
    CatalogLookupError,
    CertificateError,
    InconsistentSpectrumError,
    PermutationError,
    EnumerationCapError,
    NormalSubgroupGuardError,
    OSError,
    ValueError,
)


class RunConfigError(ValueError):
    pass


class _ArgumentParser(argparse.ArgumentParser):

    def error(self, message: str):
        raise RunConfigError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument('--catalog', default=argparse.SUPPRESS, help='catalog JSON, defaults to the bundled one')
    common.add_argument('--extra-corpus', default=argparse.SUPPRESS, help='catalog JSON of extra solvable groups')
    common.add_argument('--format', choices=FORMATS, default=argparse.SUPPRESS)
    common.add_argument('--out', default=argparse.SUPPRESS, help='output file, defaults to standard output')
    common.add_argument('--max-multiplicity', type=int, default=argparse.SUPPRESS)
    common.add_argument('--enum-cap', type=int, default=argparse.SUPPRESS)
    common.add_argument('--grid', type=int, default=argparse.SUPPRESS, help='evaluate spectra at divisors of GRID')
    common.add_argument('--config', default=argparse.SUPPRESS, help='yaml run configuration')
    common.add_argument('--verbose', action='store_true', default=argparse.SUPPRESS)

    parser = _ArgumentParser(prog='ordertype', description='order and exponent types of finite permutation groups')
    commands = parser.add_subparsers(dest='command')
    catalog_parser = commands.add_parser('catalog', parents=[common], help='list or dump the catalog')
    catalog_parser.add_argument('action', choices=('list', 'dump'))
    spectrum_parser = commands.add_parser('spectrum', parents=[common], help='spectra of one group')
    spectrum_parser.add_argument('selector')
    commands.add_parser('verify-theorem', parents=[common], help='verify the published coincidence')
    commands.add_parser('emit-tables', parents=[common], help='exponent-spectrum rows and products')
    screen_parser = commands.add_parser('screen', parents=[common], help='least-squares screen of a target')
    screen_parser.add_argument('target')
    search_parser = commands.add_parser('search', parents=[common], help='search a multiplicity certificate')
    search_parser.add_argument('target')
    return parser


def load_run_config(args: argparse.Namespace) -> EasyDict:
    """
    Defaults, then the yaml file given by ``--config``, then the command-line flags.
    """
    cfg = deep_merge_dicts(run_config, dict())
    options = vars(args)
    try:
        if 'config' in options:
            cfg = deep_merge_dicts(cfg, read_config(options['config']))
    except (OSError, RuntimeError, yaml.YAMLError) as e:
        raise RunConfigError(str(e))
    overrides = dict()
    for key in ('catalog', 'extra_corpus', 'format', 'out', 'enum_cap', 'grid', 'verbose'):
        if key in options:
            overrides[key] = options[key]
    if 'max_multiplicity' in options:
        overrides['solver'] = dict(max_multiplicity=options['max_multiplicity'])
    cfg = deep_merge_dicts(cfg, overrides)
    cfg.command = args.command
    if cfg.grid is not None and cfg.grid < 1:
        raise RunConfigError('grid must be a positive integer, got {}'.format(cfg.grid))
    return cfg


def _setup_logger(verbose: bool) -> None:
    logger.remove()
    logger.add(sys.stderr, level='DEBUG' if verbose else 'INFO', format='{level: <8} | {message}')


def _output_format(cfg: EasyDict, command: str) -> str:
    fmt = cfg.format or DEFAULT_FORMATS[command]
    if fmt == 'table' and command != 'catalog list':
        raise RunConfigError("format 'table' is only available for 'catalog list'")
    return fmt


def _searcher_config(cfg: EasyDict) -> Dict:
    return dict(
        max_multiplicity=cfg.solver.max_multiplicity,
        iter_factor=cfg.solver.iter_factor,
        normal_tol=cfg.solver.normal_tol,
        screen_tol=cfg.solver.screen_tol,
        exclude_direct_products=cfg.solver.exclude_direct_products,
        max_normal_closures=cfg.max_normal_closures,
    )


def _extra_corpus(cfg: EasyDict) -> Optional[Catalog]:
    if not cfg.extra_corpus:
        return None
    return load_catalog(cfg.extra_corpus, enum_cap=cfg.enum_cap)


def cmd_catalog(cfg: EasyDict, catalog: Catalog, action: str) -> int:
    fmt = _output_format(cfg, 'catalog ' + action)
    if action == 'dump':
        if fmt != 'json':
            raise RunConfigError("'catalog dump' writes json only")
        if cfg.out:
            dump_catalog(catalog, cfg.out)
        else:
            write_text(dump_json([d.to_dict() for d in catalog]))
        return EXIT_OK
    if fmt == 'table':
        text = catalog_table(catalog)
    elif fmt == 'json':
        text = dump_json(frame_records(catalog_frame(catalog)))
    else:
        text = frame_to_csv(catalog_frame(catalog))
    write_text(text, cfg.out)
    return EXIT_OK


def cmd_spectrum(cfg: EasyDict, catalog: Catalog, selector: str) -> int:
    """
    Order, exponent and revolved spectra and the valuation vector of one group, evaluated at the divisors of
    ``--grid``, on the published columns for published groups, or at the divisors of the group exponent.
    """
    fmt = _output_format(cfg, 'spectrum')
    d = catalog.resolve(selector)
    order = order_spectrum(catalog.group(d.id))
    exponent = exponent_spectrum(order)
    revolved = revolved_spectrum(exponent)
    vector = valuation_vector(revolved)
    grid = grid_for(cfg.grid, exponent.exponent, d.id in PUBLISHED_ROWS)
    row = spectrum_frame([d], {d.id: exponent}, grid)
    values = group_frame(order, exponent, revolved, grid)
    if fmt == 'json':
        data = dict(
            id=list(d.id),
            name=d.name,
            order=exponent.group_order,
            exponent=exponent.exponent,
            solvable=d.solvable,
            grid=grid,
            values=[
                dict(n=n, o=order[n], e=exponent.at(n), r=revolved.at(n).to_pairs()) for n in grid
            ],
            valuation=vector.to_triples(),
        )
        text = dump_json(data)
    else:
        text = frames_to_csv({'exponent spectrum': row, 'spectra': values, 'valuation': valuation_frame(vector)})
    write_text(text, cfg.out)
    return EXIT_OK


def _emit_frames(frames: Dict, fmt: str, extra: Optional[Dict] = None) -> str:
    if fmt == 'json':
        data = dict(tables={title: frame_records(frame) for title, frame in frames.items()})
        data.update(extra or dict())
        return dump_json(data)
    return frames_to_csv(frames)


def cmd_emit_tables(cfg: EasyDict, catalog: Catalog) -> int:
    fmt = _output_format(cfg, 'emit-tables')
    frames = TheoremEvaluator(dict(verbose=cfg.verbose), catalog).tables(pairs=fmt == 'json')
    write_text(_emit_frames(frames, fmt), cfg.out)
    return EXIT_OK


def cmd_verify_theorem(cfg: EasyDict, catalog: Catalog) -> int:
    """
    Run every theorem check; the exit status is non-zero at the first failing check, which is logged by name.
    """
    fmt = _output_format(cfg, 'verify-theorem')
    evaluator = TheoremEvaluator(dict(verbose=cfg.verbose), catalog)
    report = evaluator.eval()
    frames = dict(report.frames)
    if fmt == 'json':
        frames = evaluator.tables(pairs=True)
        text = _emit_frames(frames, fmt, dict(passed=report.passed, checks=report.to_list()))
    else:
        frames['checks'] = pd.DataFrame(
            [[c.name, c.passed, c.detail] for c in report.checks], columns=['check', 'passed', 'detail']
        )
        text = frames_to_csv(frames)
    write_text(text, cfg.out)
    return EXIT_OK if report.passed else EXIT_VERIFICATION_FAILED


def cmd_screen(cfg: EasyDict, catalog: Catalog, target: str) -> int:
    fmt = _output_format(cfg, 'screen')
    searcher = CertificateSearcher(_searcher_config(cfg), catalog, _extra_corpus(cfg))
    data = searcher.screen(target)
    if fmt == 'json':
        text = dump_json(data)
    else:
        flat = dict(data)
        target_info = flat.pop('target')
        flat = dict(id=format_id(target_info['id']), name=target_info['name'], **flat)
        text = frame_to_csv(pd.DataFrame([flat]))
    write_text(text, cfg.out)
    return EXIT_OK


def cmd_search(cfg: EasyDict, catalog: Catalog, target: str) -> int:
    """
    Full search pipeline. Exit status 0 for a verified certificate, 3 for an infeasible target, 2 for a failed
    verification and 5 when the target is itself solvable.
    """
    fmt = _output_format(cfg, 'search')
    searcher = CertificateSearcher(_searcher_config(cfg), catalog, _extra_corpus(cfg))
    result = searcher.eval(target)
    if fmt == 'json':
        text = dump_json(result.to_dict())
    elif result.certificate is not None:
        records = [['a', format_id(i), k] for i, k in result.certificate.side_a]
        records += [['b', format_id(i), k] for i, k in result.certificate.side_b]
        text = frames_to_csv(
            {
                'status': pd.DataFrame([[result.status, result.target_multiplicity]],
                                       columns=['status', 'target_multiplicity']),
                'certificate': pd.DataFrame(records, columns=['side', 'Id', 'multiplicity']),
            }
        )
    else:
        text = frames_to_csv({'status': pd.DataFrame([[result.status]], columns=['status'])})
    write_text(text, cfg.out)
    return SEARCH_EXIT_CODES.get(result.status, EXIT_VERIFICATION_FAILED)


def run(cfg: EasyDict, args: argparse.Namespace) -> int:
    catalog = load_catalog(cfg.catalog, enum_cap=cfg.enum_cap)
    if cfg.command == 'catalog':
        return cmd_catalog(cfg, catalog, args.action)
    if cfg.command == 'spectrum':
        return cmd_spectrum(cfg, catalog, args.selector)
    if cfg.command == 'verify-theorem':
        return cmd_verify_theorem(cfg, catalog)
    if cfg.command == 'emit-tables':
        return cmd_emit_tables(cfg, catalog)
    if cfg.command == 'screen':
        return cmd_screen(cfg, catalog, args.target)
    return cmd_search(cfg, catalog, args.target)


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise RunConfigError('a command is required')
        cfg = load_run_config(args)
    except RunConfigError as e:
        sys.stderr.write('ordertype: {}\n'.format(e))
        return EXIT_INPUT_ERROR
    _setup_logger(cfg.verbose)
    try:
        return run(cfg, args)
    except SolverSoundnessError as e:
        logger.error('[SOLVER] {}'.format(e))
        return EXIT_VERIFICATION_FAILED
    except INPUT_ERRORS as e:
        logger.error('[INPUT] {}'.format(e))
        return EXIT_INPUT_ERROR


if __name__ == '__main__':
    sys.exit(main())

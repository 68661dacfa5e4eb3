#! -*- coding: utf-8 -*-
'''命令行入口

stdout只输出结果, 运行期间库内日志重定向到stderr
exit code: 0成功, 1验证失败/拒绝计算/cache冲突, 2非法输入
'''

import argparse
import contextlib
import csv
import io
import json
import sys
from typing import Callable, Dict, Optional, Sequence, Tuple
from psi4opt.compositions import CompositionSpace, balanced_representative, concentrated_representative, format_vector
from psi4opt.descendants import ENGINES, ModuliIndex, DescendantEngine, build_engine, is_stable
from psi4opt.optimizer import DescendantOracle, brute_force_extrema, check_budget
from psi4opt.pipelines import DEFAULT_CONFIG, REPORT_FORMATS, ExtremalVerifier, emit_report
from psi4opt.snippets import (DottableDict, InputError, ConfigError, RefusalError, CacheFormatError, CacheConflictError,
                              format_rational, log_info)


__all__ = ['build_config', 'build_parser', 'main']

INT_KEYS = ('budget', 'depth', 'seed', 'samples', 'workers')
POSITIVE_KEYS = ('budget', 'depth', 'samples', 'workers')
Result = Tuple[str, int]


def build_config(config_path:str=None, **kwargs) -> DottableDict:
    '''默认值 -> json配置文件 -> 命令行参数, 后者覆盖前者

    :param config_path: str, json配置文件路径
    :param kwargs: 显式传入的配置项
    '''
    config = DottableDict(DEFAULT_CONFIG)
    if config_path is not None:
        try:
            with open(config_path, 'r', encoding='utf-8') as f:
                config.update(json.load(f))
        except (OSError, json.JSONDecodeError) as e:
            raise ConfigError(f'cannot read config file {config_path}: {e}') from e
    config.update(kwargs)

    unknown = sorted(set(config) - set(DEFAULT_CONFIG))
    if unknown:
        raise ConfigError(f'unknown config keys {unknown}')
    for key in INT_KEYS:
        if isinstance(config[key], bool) or not isinstance(config[key], int):
            raise ConfigError(f'{key} must be an integer, got {config[key]!r}')
    for key in POSITIVE_KEYS:
        if config[key] < 1:
            raise ConfigError(f'{key} must be >= 1, got {config[key]}')
    if config.format not in REPORT_FORMATS:
        raise ConfigError(f'unknown format {config.format!r}, choose from {"/".join(REPORT_FORMATS)}')
    if config.engine not in ENGINES:
        raise ConfigError(f'unknown engine {config.engine!r}, choose from {sorted(ENGINES)}')
    if not isinstance(config.progress, bool):
        raise ConfigError(f'progress must be true/false, got {config.progress!r}')
    if config.cache is not None and not isinstance(config.cache, str):
        raise ConfigError(f'cache must be a path, got {config.cache!r}')
    return config


# ======================== 各子命令, 返回(stdout文本, exit code) ========================
def _space(g:int, n:int) -> CompositionSpace:
    return CompositionSpace(n, ModuliIndex(g, n).d)


def cmd_compute(args, config:DottableDict, engine:DescendantEngine) -> Result:
    value = engine.descendant(args.g, args.exponents)
    return format_rational(value) + '\n', 0


def cmd_table(args, config, engine) -> Result:
    space = _space(args.g, args.n)
    check_budget(space, config.budget)
    D = DescendantOracle(args.g, engine=engine)
    rows = [(format_vector(e), format_rational(D(space, e))) for e in space]
    if config.format == 'csv':
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow(['e', 'value'])
        writer.writerows(rows)
        return buffer.getvalue(), 0
    if config.format == 'json':
        return json.dumps([{'e': e, 'value': v} for e, v in rows], indent=2) + '\n', 0
    return ''.join(f'{e} {v}\n' for e, v in rows), 0


def cmd_extrema(args, config, engine) -> Result:
    space = _space(args.g, args.n)
    D = DescendantOracle(args.g, engine=engine)
    ext = brute_force_extrema(D, space, config.budget, config.workers, config.progress)
    balanced, concentrated = balanced_representative(space), concentrated_representative(space)
    max_witness = next((e for e in ext.argmax if sorted(e) == sorted(balanced)), ext.argmax[0])
    min_witness = concentrated if concentrated in ext.argmin else ext.argmin[0]
    lines = [f'max {format_rational(ext.max_value)} at {format_vector(max_witness)}',
             f'min {format_rational(ext.min_value)} at {format_vector(min_witness)}']
    max_orbits = len({tuple(sorted(e)) for e in ext.argmax})
    min_orbits = len({tuple(sorted(e)) for e in ext.argmin})
    # 单个轨道不算plateau
    if ext.is_plateau and max_orbits > 1:
        lines.append(f'plateau: all values {format_rational(ext.max_value)}')
    elif not ext.is_plateau:
        if max_orbits > 1:
            lines.append(f'plateau: max attained on {max_orbits} orbits')
        if min_orbits > 1:
            lines.append(f'plateau: min attained on {min_orbits} orbits')
    return ''.join(line + '\n' for line in lines), 0


def cmd_verify(args, config, engine) -> Result:
    verifier = ExtremalVerifier(engine, config)
    reports = verifier.verify_range(args.gmax, args.nmax)
    text = emit_report(reports, config.format)
    if not reports:
        note = f'no stable (g, n) with g <= {args.gmax}, n <= {args.nmax}; nothing to verify'
        log_info(note)
        # csv/json保持可直接解析
        if config.format == 'table':
            text += f'# {note}, PASS\n'
    return text, 0 if all(report.passed for report in reports) else 1


def cmd_identities(args, config, engine) -> Result:
    verifier = ExtremalVerifier(engine, config)
    report = verifier.verify_identities(args.g, args.n, config.samples)
    lines = [f'# g={report.g} n={report.n} mode={report.mode} vectors={report.vectors} seed={report.seed}']
    for name, check in report.checks.items():
        status = 'PASS' if check.passed else 'FAIL'
        if not check.applicable:
            status = 'N/A'
        line = f'{name} {status} {check.checked}'
        if check.witness is not None:
            line += f' {check.witness}'
        lines.append(line)
    return ''.join(line + '\n' for line in lines), 0 if report.passed else 1


def cmd_balanced(args, config, engine) -> Result:
    '''只列出balanced向量的取值, 不做任何断言'''
    lines = []
    for g in range(args.gmax + 1):
        for n in range(1, args.nmax + 1):
            if not is_stable(g, n):
                continue
            vector = balanced_representative(_space(g, n))
            lines.append(f'{g} {n} {format_vector(vector)} {format_rational(engine.descendant(g, vector))}')
    return ''.join(line + '\n' for line in lines), 0


def cmd_cache(args, config, engine) -> Result:
    if args.action == 'export':
        count = engine.export_cache(args.path)
        return f'exported {count}\n', 0
    added = engine.import_cache(args.path)
    return f'imported {added}\n', 0


COMMANDS: Dict[str, Callable] = {
    'compute': cmd_compute,
    'table': cmd_table,
    'extrema': cmd_extrema,
    'verify': cmd_verify,
    'identities': cmd_identities,
    'balanced': cmd_balanced,
    'cache': cmd_cache,
}


# ======================== 参数解析 ========================
def _common_parser() -> argparse.ArgumentParser:
    '''全局参数, 放在子命令前后均可; 未给出的参数不出现在namespace中'''
    parser = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    parser.add_argument('--budget', type=int, help='maximum space size for exhaustive operations')
    parser.add_argument('--depth', type=int, help='maximum dimension d for the engine')
    parser.add_argument('--cache', help='cache file, loaded at start if present and saved on success')
    parser.add_argument('--format', choices=REPORT_FORMATS, help='report format')
    parser.add_argument('--seed', type=int, help='sampling seed')
    parser.add_argument('--config', help='json config file')
    parser.add_argument('--workers', type=int, help='threads used to evaluate a space')
    parser.add_argument('--progress', action='store_true', help='show progress bars on stderr')
    return parser


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(prog='psi4opt', parents=[common],
                                     description='Exact psi-class descendant integrals and their extremal behaviour')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('compute', parents=[common], help='print <τ_e1 ... τ_en>_g')
    p.add_argument('--g', type=int, required=True)
    p.add_argument('exponents', type=int, nargs='+')

    for name, text in (('table', 'print every vector of E(n, 3g-3+n) with its value'),
                       ('extrema', 'print max/min with witnesses')):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument('--g', type=int, required=True)
        p.add_argument('--n', type=int, required=True)

    for name, text in (('verify', 'verify the extremal theorem on a range of (g, n)'),
                       ('balanced', 'tabulate the values of balanced vectors')):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument('--gmax', type=int, required=True)
        p.add_argument('--nmax', type=int, required=True)

    p = sub.add_parser('identities', parents=[common], help='check string/dilaton identities')
    p.add_argument('--g', type=int, required=True)
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--samples', type=int)

    p = sub.add_parser('cache', parents=[common], help='export or import the descendant cache')
    p.add_argument('action', choices=('export', 'import'))
    p.add_argument('path')
    return parser


def _run(args: argparse.Namespace) -> Result:
    overrides = {key: value for key, value in vars(args).items() if key in DEFAULT_CONFIG and value is not None}
    config = build_config(getattr(args, 'config', None), **overrides)
    engine = build_engine(config.engine, depth_limit=config.depth)
    if config.cache is not None:
        engine.load_if_exists(config.cache)
    text, code = COMMANDS[args.command](args, config, engine)
    if config.cache is not None and code == 0:
        engine.export_cache(config.cache)
    return text, code


def main(argv:Optional[Sequence[str]]=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    stdout = sys.stdout
    try:
        with contextlib.redirect_stdout(sys.stderr):
            text, code = _run(args)
    except (InputError, CacheFormatError) as e:
        print(f'psi4opt: error: {e}', file=sys.stderr)
        return 2
    except CacheConflictError as e:
        print(f'psi4opt: cache conflict: {e}', file=sys.stderr)
        return 1
    except RefusalError as e:
        print(f'psi4opt: refused: {e}', file=sys.stderr)
        return 1
    except OSError as e:
        print(f'psi4opt: error: {e}', file=sys.stderr)
        return 2
    stdout.write(text)
    stdout.flush()
    return code


if __name__ == '__main__':
    sys.exit(main())

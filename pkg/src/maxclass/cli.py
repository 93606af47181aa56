"""Command-line entry point: ``maxclass <subcommand> ...``.

Exit status: 0 success, 1 claim mismatch, 2 usage error, 3 internal
consistency failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from typing import Any

from . import combinatorics, enumeration, zeta
from .errors import ConsistencyError
from .matrix_oracle import (
    DEFAULT_DIM_CAP, DEFAULT_TOLERANCE, build_rep, check_relations, commutant_dimension, subspace_stable,
)
from .standard_form import (
    GroupSpec, LambdaTuple, closure_defect, is_irreducible, lambda_entry, minimal_period_exponent,
)
from .verify import GROUPS, run_verify

log = logging.getLogger('maxclass')

EMIT_FORMATS = ('table', 'json', 'csv')


class UsageError(Exception):
    pass


def parse_levels(text: str) -> list[int]:
    ''' "3" or an inclusive range "2-5"; a reversed range is empty '''
    try:
        if '-' in text:
            lo, hi = (int(x) for x in text.split('-', 1))
            return list(range(lo, hi + 1))
        return [int(text)]
    except ValueError:
        raise argparse.ArgumentTypeError(f'bad level {text!r}; use N or LO-HI') from None


def parse_exponents(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(',') if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f'bad exponent list {text!r}') from None


# reports

def enumeration_report(spec: GroupSpec, cases: bool, jobs: int) -> dict[str, Any]:
    log.info('enumerating %s: %d tuples', spec, spec.dim ** (spec.n - 1) if spec.N else 1)
    if spec.N == 0:
        return {'n': spec.n, 'p': spec.p, 'N': 0, 'r': 1, 'tuples_total': 1, 'irreducible_total': 1}
    a = enumeration.analyze(spec)
    r = enumeration.count_twist_isoclasses(spec, jobs=jobs)
    if r != a.weight():
        raise ConsistencyError(f'{spec}: partitioned count {r} != single-pass count {a.weight()}')
    report: dict[str, Any] = {
        'n': spec.n, 'p': spec.p, 'N': spec.N, 'r': r,
        'tuples_total': int(len(a.exponents)), 'irreducible_total': int(a.irreducible.sum()),
    }
    if cases:
        counts = enumeration.case_counts(spec, a)
        family = enumeration.case_family(spec)
        if family == enumeration.M4_AT_2:
            report['cases'] = {k: v for k, v in counts.items() if '.' not in k}
            report['subcases'] = {k: v for k, v in counts.items() if '.' in k}
        else:
            report['cases'] = counts
        report['family'] = family
    return report


def _emit(rows: list[dict[str, Any]], header: list[str], fmt: str, json_payload: Any) -> str:
    if fmt == 'json':
        return json.dumps(json_payload, indent=2, sort_keys=False) + '\n'
    if fmt == 'csv':
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=header, lineterminator='\n', extrasaction='ignore')
        w.writeheader()
        w.writerows(rows)
        return buf.getvalue()
    widths = {h: max([len(h)] + [len(str(r[h])) for r in rows]) for h in header}
    lines = ['  '.join(h.rjust(widths[h]) for h in header)]
    lines += ['  '.join(str(r[h]).rjust(widths[h]) for h in header) for r in rows]
    return '\n'.join(lines) + '\n'


def emit_enumeration(reports: list[dict[str, Any]], fmt: str, cases: bool, single: bool) -> str:
    if cases:
        header = ['n', 'p', 'N', 'case', 'count']
        rows = [{'n': r['n'], 'p': r['p'], 'N': r['N'], 'case': lab, 'count': c}
                for r in reports for lab, c in r.get('cases', {}).items()]
    else:
        header = ['n', 'p', 'N', 'r', 'tuples_total', 'irreducible_total']
        rows = reports
    return _emit(rows, header, fmt, reports[0] if single and reports else reports)


def zeta_local_report(n: int, p: int, terms: int) -> dict[str, Any]:
    r = zeta.local_closed_form(n, p)
    return {'n': n, 'p': p, 'numer': list(r.numer), 'denom': list(r.denom),
            'coeffs': zeta.expand(r, terms), 'provenance': r.provenance}


def emit_zeta_local(rep: dict[str, Any], fmt: str) -> str:
    if fmt == 'json':
        return json.dumps(rep) + '\n'
    rows = [{'N': k, 'coefficient': c} for k, c in enumerate(rep['coeffs'])]
    body = _emit(rows, ['N', 'coefficient'], fmt, None)
    if fmt == 'table':
        r = zeta.RationalSeries(tuple(rep['numer']), tuple(rep['denom']), rep['p'], rep['provenance'])
        body = f'M_{rep["n"]}, p={rep["p"]}: {r}\nprovenance: {rep["provenance"]}\n' + body
    return body


def zeta_global_report(n: int, bound: int) -> dict[str, Any]:
    g = zeta.global_coefficients(n, bound)
    return {'n': n, 'max': bound, 'coefficients': g.values,
            'provenance': {str(p): v for p, v in g.provenance.items()}}


def emit_zeta_global(rep: dict[str, Any], fmt: str) -> str:
    if fmt == 'json':
        return json.dumps(rep) + '\n'
    rows = [{'m': m, 'r_m': v} for m, v in enumerate(rep['coefficients'], 1)]
    return _emit(rows, ['m', 'r_m'], fmt, None)


# subcommand handlers

def _tuple(args) -> LambdaTuple:
    spec = GroupSpec(args.n, args.p, args.level)
    return LambdaTuple.from_exponents(spec, args.lambdas)


def cmd_tk(args) -> str:
    if (args.p is None) != (args.mod is None):
        raise UsageError('--p and --mod go together')
    if args.p is None:
        return f'{combinatorics.t_number(args.k, args.j)}\n'
    return f'{combinatorics.t_number_mod(args.k, args.j, args.p, args.mod)}\n'


def cmd_rep_show(args) -> str:
    t = _tuple(args)
    s = t.spec
    out = [f'{s}, working modulus {s.p}^{s.W}', f'lambdas (exponents): {t}', f'depths: {t.depths()}']
    for i in range(2, s.n + 1):
        entries = ' '.join(str(lambda_entry(t, i, j).e) for j in range(1, s.dim + 1))
        out.append(f'x_{i} diagonal exponents: {entries}')
    for i in range(2, s.n + 1):
        out.append(f'closure defect at i={i}: {closure_defect(t, i).e}')
    if t.is_well_defined():
        out.append(f'minimal period exponent (indices >= 1): {minimal_period_exponent(t, 1)}')
        out.append(f'minimal period exponent (indices >= 2): {minimal_period_exponent(t, 2)}')
        out.append(f'irreducible: {is_irreducible(t)}')
    else:
        out.append('not well defined')
    return '\n'.join(out) + '\n'


def cmd_rep_check(args) -> str:
    t = _tuple(args)
    gens = build_rep(t)
    rel = check_relations(gens)
    out = [f'{t.spec}, lambdas {t}', 'relations: ' + ('ok' if rel else f'FAILED ({rel.failed})')]
    for k in range(t.spec.N + 1):
        out.append(f'V_{t.spec.p}^{k} stable: {subspace_stable(gens, k)}')
    if rel:
        out.append(f'commutant dimension: {commutant_dimension(gens, args.tolerance, args.dim_cap)}')
    return '\n'.join(out) + '\n'


def cmd_orbit(args) -> str:
    t = _tuple(args)
    if not t.is_well_defined():
        raise UsageError(f'{t} is not well defined')
    orb = enumeration.orbit_of(t)
    out = [f'{t.spec}, lambdas {t}', f'representative: {orb.representative}', f'orbit size: {orb.size}']
    if is_irreducible(t):
        out.append(f'fast orbit size: {enumeration.orbit_size_fast(t)}')
    out += [f'  shift {s}: {m}' for s, m in enumerate(orb.members)]
    return '\n'.join(out) + '\n'


def cmd_enumerate(args) -> str:
    levels = args.level
    reports = [enumeration_report(GroupSpec(args.n, args.p, N), args.cases, args.jobs) for N in levels]
    return emit_enumeration(reports, args.emit, args.cases, single=len(levels) == 1 and not args.level_range)


def cmd_zeta_local(args) -> str:
    return emit_zeta_local(zeta_local_report(args.n, args.p, args.terms), args.emit)


def cmd_zeta_global(args) -> str:
    return emit_zeta_global(zeta_global_report(args.n, args.max), args.emit)


# parser

def _group_args(p: argparse.ArgumentParser, lambdas: bool = False) -> None:
    p.add_argument('--n', type=int, required=True, help='class parameter of M_n')
    p.add_argument('--p', type=int, required=True, help='prime')
    p.add_argument('--level', type=int, required=True, help='N, for dimension p^N')
    if lambdas:
        p.add_argument('--lambdas', type=parse_exponents, required=True,
                       help='exponents e_2,...,e_n of lambda_2..lambda_n at modulus p^(N+n)')


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', help='JSON file whose keys provide defaults for the flags')
    common.add_argument('--output', '-o', help='write the data stream here instead of stdout')
    common.add_argument('--jobs', type=int, default=enumeration.default_jobs(),
                        help='worker processes (default: $MAXCLASS_JOBS or 1)')
    common.add_argument('--verbose', '-v', action='store_true')

    parser = argparse.ArgumentParser(prog='maxclass',
                                     description='Twist isoclasses and representation zeta functions of M_n.')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('tk', parents=[common], help='T_k(j), optionally mod p^M')
    p.add_argument('--k', type=int, required=True)
    p.add_argument('--j', type=int, required=True)
    p.add_argument('--p', type=int)
    p.add_argument('--mod', type=int, help='modulus exponent M')
    p.set_defaults(func=cmd_tk)

    rep = sub.add_parser('rep', help='inspect one standard-form tuple')
    rsub = rep.add_subparsers(dest='rep_command', required=True)
    p = rsub.add_parser('show', parents=[common], help='diagonal entries, closure defects, irreducibility')
    _group_args(p, lambdas=True)
    p.set_defaults(func=cmd_rep_show)
    p = rsub.add_parser('check', parents=[common], help='matrix relations, stable subspaces, commutant')
    _group_args(p, lambdas=True)
    p.add_argument('--tolerance', type=float, default=DEFAULT_TOLERANCE)
    p.add_argument('--dim-cap', type=int, default=DEFAULT_DIM_CAP)
    p.set_defaults(func=cmd_rep_check)

    p = sub.add_parser('orbit', parents=[common], help='shout orbit of a tuple')
    _group_args(p, lambdas=True)
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser('enumerate', parents=[common], help='count twist isoclasses r_{p^N}(M_n)')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--p', type=int, required=True)
    p.add_argument('--level', type=str, required=True, help='N or an inclusive range LO-HI')
    p.add_argument('--cases', action='store_true', help='per-case orbit counts')
    p.add_argument('--emit', choices=EMIT_FORMATS, default='table')
    p.set_defaults(func=cmd_enumerate)

    z = sub.add_parser('zeta', help='local and global zeta functions')
    zsub = z.add_subparsers(dest='zeta_command', required=True)
    p = zsub.add_parser('local', parents=[common], help='coefficients of the p-local zeta function')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--p', type=int, required=True)
    p.add_argument('--terms', type=int, default=8, help='highest power of t to expand')
    p.add_argument('--emit', choices=EMIT_FORMATS, default='table')
    p.set_defaults(func=cmd_zeta_local)
    p = zsub.add_parser('global', parents=[common], help='r_m of the global zeta function')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--max', type=int, required=True)
    p.add_argument('--emit', choices=EMIT_FORMATS, default='table')
    p.set_defaults(func=cmd_zeta_global)

    p = sub.add_parser('verify', parents=[common], help='check every published count and series')
    p.add_argument('--only', action='append', choices=list(GROUPS), help='restrict to a claim group (repeatable)')
    p.set_defaults(func=None)
    return parser


def _apply_config(parser: argparse.ArgumentParser, argv: list[str]) -> None:
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument('--config')
    known, _ = pre.parse_known_args(argv)
    if not known.config:
        return
    try:
        with open(known.config) as fh:
            cfg = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        parser.error(f'cannot read config {known.config}: {exc}')
    cfg = {k.replace('-', '_'): v for k, v in cfg.items()}
    actions = [parser]
    while actions:
        ps = actions.pop()
        ps.set_defaults(**cfg)
        for a in ps._actions:
            if isinstance(a, argparse._SubParsersAction):
                actions.extend(a.choices.values())
            elif a.dest in cfg:
                a.required = False


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    parser = build_parser()
    _apply_config(parser, argv)
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format='%(levelname)s %(name)s: %(message)s', stream=sys.stderr)
    if args.command == 'enumerate':
        levels = args.level
        if isinstance(levels, int):
            levels = str(levels)
        try:
            args.level_range = '-' in levels
            args.level = parse_levels(levels)
        except argparse.ArgumentTypeError as exc:
            parser.error(str(exc))
    out = open(args.output, 'w') if args.output else sys.stdout
    try:
        if args.command == 'verify':
            return run_verify(args.only, out)
        out.write(args.func(args))
        return 0
    except (UsageError, ValueError, IndexError) as exc:
        print(f'maxclass: error: {exc}', file=sys.stderr)
        return 2
    except ConsistencyError as exc:
        print(f'maxclass: internal consistency failure: {exc}', file=sys.stderr)
        return 3
    finally:
        if out is not sys.stdout:
            out.close()


if __name__ == '__main__':
    sys.exit(main())

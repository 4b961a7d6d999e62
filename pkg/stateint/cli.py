# Copyright 2026 StateInt
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Command line front end: stateint {eval, pretzel, phi, roots, verify}"""
import argparse
import contextlib
import itertools
import logging
import math
import sys

from stateint.evaluators import evaluate_residue_sum, evaluate_thm1, resolve_strip_set
from stateint.evaluators.gluing import check_lambda
from stateint.evaluators.pretzel import pretzel_torsion, split_pretzel_roots
from stateint.exceptions import InvalidSpec, NotCoprime, StateIntError
from stateint.faddeev import AdmissiblePair, phi, phi_rational
from stateint.logger import Logger
from stateint.mappers import JSONMapper, TableMapper
from stateint.quadrature.contour import ContourConfig
from stateint.quadrature.state_integral import state_integral_numeric
from stateint.suites import SUITES, run_suites, summary
from stateint.sums import PretzelSpec, make_spec
from stateint.utils import format_complex, parse_complex

LG = Logger()
JSON = JSONMapper()
TABLE = TableMapper()

EXIT_OK, EXIT_FAILURE, EXIT_USAGE = 0, 1, 2


class UsageError(ValueError):
    """Invalid command line input, detected before any computation"""


USAGE_ERRORS = (UsageError, NotCoprime, InvalidSpec)


@contextlib.contextmanager
def validating():
    """Input checks run inside this block; any ValueError they raise
    becomes a UsageError"""
    try:
        yield
    except USAGE_ERRORS:
        raise
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _add_pair(parser):
    parser.add_argument('--M', type=int, required=True, help='numerator of b^2')
    parser.add_argument('--N', type=int, required=True, help='denominator of b^2')


def _add_contour(parser):
    parser.add_argument('--lambda', dest='lam', type=float,
                        help='contour parameter, default close to zero')
    parser.add_argument('--quad-tol', type=float, help='quadrature tolerance')
    parser.add_argument('--height', type=float, help='Im x of the quadrature contour')
    parser.add_argument('--half-width', type=float, help='initial truncation T')
    parser.add_argument('--panels', type=int, help='initial panel count')


def _add_output(parser):
    parser.add_argument('--output', choices=('json', 'text'), default='json')
    parser.add_argument('--verbose', action='store_true', help='log progress to stderr')


def build_parser():
    parser = argparse.ArgumentParser(
        prog='stateint', description='Quantum dilogarithm state-integrals')
    commands = parser.add_subparsers(dest='command', required=True)

    evaluate = commands.add_parser('eval', help='evaluate the AB state-integral')
    evaluate.add_argument('--A', type=int, required=True)
    evaluate.add_argument('--B', type=int, required=True)
    _add_pair(evaluate)
    evaluate.add_argument('--method', default='closed',
                          choices=('closed', 'residue', 'quadrature', 'all'))
    evaluate.add_argument('--tol', type=float, default=1e-6,
                          help='largest accepted difference between methods')
    _add_contour(evaluate)
    _add_output(evaluate)

    pretzel = commands.add_parser('pretzel', help='evaluate the pretzel state-integral')
    _add_pair(pretzel)
    pretzel.add_argument('--method', default='residue',
                         choices=('residue', 'quadrature', 'all'))
    pretzel.add_argument('--tol', type=float, default=1e-6)
    _add_contour(pretzel)
    _add_output(pretzel)

    phi_cmd = commands.add_parser('phi', help="Faddeev's quantum dilogarithm")
    _add_pair(phi_cmd)
    phi_cmd.add_argument('--x', required=True, help='complex literal such as 0.1+0.05i')
    phi_cmd.add_argument('--method', default='integral',
                         choices=('integral', 'closed', 'both'))
    _add_output(phi_cmd)

    roots = commands.add_parser('roots', help='gluing roots and the strip set')
    roots.add_argument('--A', type=int)
    roots.add_argument('--B', type=int)
    roots.add_argument('--pretzel', action='store_true')
    _add_pair(roots)
    roots.add_argument('--lambda', dest='lam', type=float)
    _add_output(roots)

    verify = commands.add_parser('verify', help='run the verification suites')
    verify.add_argument('--suite', default='all', choices=('all',) + tuple(SUITES))
    verify.add_argument('--seed', type=int, default=0)
    _add_output(verify)
    return parser


def _contour(args):
    return ContourConfig.from_config(height=args.height, half_width=args.half_width,
                                     panels=args.panels, tol=args.quad_tol)


def _validate_tol(value, flag):
    if value is not None and not (value > 0 and math.isfinite(value)):
        raise UsageError("{} must be a positive number".format(flag))


def _validate_contour(spec, pair, args):
    _contour(args)
    if args.lam is not None:
        check_lambda(spec, pair, args.lam)


def _evaluations(spec, pair, args, methods):
    runners = {
        'closed': lambda: evaluate_thm1(spec, pair, args.lam),
        'residue': lambda: evaluate_residue_sum(spec, pair, args.lam),
        'quadrature': lambda: state_integral_numeric(spec, pair, _contour(args)),
    }
    return [runners[m]() for m in methods]


def _differences(reports):
    return [{'a': a.method.value, 'b': b.method.value, 'abs': abs(a.value - b.value)}
            for a, b in itertools.combinations(reports, 2)]


def _point_rows(points):
    return [{'w': p.w, 'z': p.z, 'log_z/pi i': p.log_z_im_over_pi, 'sheet': p.sheet}
            for p in points]


def _print_reports(args, reports, differences, extra=None):
    if args.output == 'json':
        if len(reports) == 1 and not extra:
            print(JSON.dumps(JSON.map(reports[0])))
        else:
            out = {'reports': [JSON.map(r) for r in reports], 'differences': differences}
            out.update(extra or {})
            print(JSON.dumps(out))
        return
    for report in reports:
        print('{}: {}'.format(report.method.value, format_complex(report.value)))
        if report.strip_points:
            print(TABLE.to_text(_point_rows(report.strip_points)))
        terms = report.diagnostics.get('terms')
        if terms:
            print(TABLE.to_text(terms))
    for row in differences:
        print('|{a} - {b}| = {abs:.3e}'.format(**row))
    for key, rows in (extra or {}).items():
        print(key)
        print(TABLE.to_text(rows if isinstance(rows, list) else [rows]))


def _methods(choice, every):
    return list(every) if choice == 'all' else [choice]


def cmd_eval(args):
    with validating():
        _validate_tol(args.tol, '--tol')
        spec = make_spec(args.A, args.B)
        pair = AdmissiblePair(args.M, args.N)
        _validate_contour(spec, pair, args)
    reports = _evaluations(spec, pair, args, _methods(args.method,
                                                       ('closed', 'residue', 'quadrature')))
    differences = _differences(reports)
    _print_reports(args, reports, differences)
    return EXIT_OK if all(d['abs'] < args.tol for d in differences) else EXIT_FAILURE


def cmd_pretzel(args):
    with validating():
        _validate_tol(args.tol, '--tol')
        spec = PretzelSpec()
        pair = AdmissiblePair(args.M, args.N)
        _validate_contour(spec, pair, args)
    reports = _evaluations(spec, pair, args, _methods(args.method, ('residue', 'quadrature')))
    differences = _differences(reports)
    _print_reports(args, reports, differences)
    return EXIT_OK if all(d['abs'] < args.tol for d in differences) else EXIT_FAILURE


def cmd_phi(args):
    with validating():
        pair = AdmissiblePair(args.M, args.N)
        x = parse_complex(args.x)
    values = {}
    if args.method in ('integral', 'both'):
        values['integral'] = phi(pair, x)
    if args.method in ('closed', 'both'):
        values['closed'] = phi_rational(pair, 2 * math.pi * pair.s * (x + pair.c_b))
    out = {'x': x, 'b': pair.b, 'values': values}
    if len(values) == 2:
        out['difference'] = abs(values['integral'] - values['closed'])
    if args.output == 'json':
        print(JSON.dumps(out))
    else:
        for method, value in values.items():
            print('{}: {}'.format(method, format_complex(value)))
        if 'difference' in out:
            print('difference: {:.3e}'.format(out['difference']))
    return EXIT_OK


def cmd_roots(args):
    with validating():
        spec = make_spec(args.A, args.B, pretzel=args.pretzel)
        pair = AdmissiblePair(args.M, args.N)
        if args.lam is not None:
            check_lambda(spec, pair, args.lam)
    lam, points = resolve_strip_set(spec, pair, args.lam)
    out = {'params': dict(spec.params(), M=pair.M, N=pair.N), 'lambda': lam,
           'strip_points': [JSON.map_point(p) for p in points]}
    if args.pretzel:
        split = split_pretzel_roots([p.z for p in points])
        out['cubics'] = split
        out['torsion'] = pretzel_torsion([p.z for p in points])
    if args.output == 'json':
        print(JSON.dumps(out))
    else:
        print('lambda: {}'.format(lam))
        print(TABLE.to_text(_point_rows(points)))
        if args.pretzel:
            print(TABLE.to_text(out['torsion']))
    return EXIT_OK


def cmd_verify(args):
    rows = run_suites(args.suite, args.seed)
    passed, total, findings = summary(rows)
    if args.output == 'json':
        print(JSON.dumps({'rows': rows, 'passed': passed, 'total': total,
                          'findings': findings}))
    else:
        print(TABLE.to_text(rows))
        print('passed {}/{} gating checks, {} non-gating findings'.format(
            passed, total, findings))
    return EXIT_OK if passed == total else EXIT_FAILURE


COMMANDS = {'eval': cmd_eval, 'pretzel': cmd_pretzel, 'phi': cmd_phi,
            'roots': cmd_roots, 'verify': cmd_verify}


def main(argv=None):
    """Entry point; returns the exit code"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    if args.verbose:
        LG.set_level(logging.INFO)
    try:
        return COMMANDS[args.command](args)
    except USAGE_ERRORS as exc:
        print('{}: {}'.format(type(exc).__name__, exc), file=sys.stderr)
        return EXIT_USAGE
    except (StateIntError, ValueError, ArithmeticError) as exc:
        LG.log(exc)
        print(JSON.dumps({'error': type(exc).__name__, 'message': str(exc)}))
        return EXIT_FAILURE


def run():
    sys.exit(main())


if __name__ == '__main__':
    run()

#!/usr/bin/env python
# coding: utf-8

"""
Command line front end::

    k3focal spectrum --space cp2 --format json
    k3focal spectrum --space op2 --margin 4/3
    k3focal verify --json

Exit status is 0 on success, 1 if a check or computation fails and 2 on a
usage error.
"""

import argparse
import json
import logging
import re
import sys
from dataclasses import dataclass
from dataclasses import field
from fractions import Fraction

from . import jacobi
from . import normalization
from . import verify
from .errors import FocalError
from .errors import InputError

logger = logging.getLogger(__name__)

SCHEMA_VERSION = '1'


def format_rational(x):
    """
    Reduced ``"p/q"``, always with a slash so a consumer never mistakes it
    for a float.
    """
    x = Fraction(x)
    return '{}/{}'.format(x.numerator, x.denominator)


_rational = re.compile(r'[+-]?\d+(/\d+)?')


def parse_rational(s):
    """
    Parse an integer or ``"p/q"``. Decimals and exponents are refused.
    """
    t = str(s).strip()
    if not _rational.fullmatch(t):
        raise InputError('rational', s, 'expected an integer or p/q')
    try:
        return Fraction(t)
    except ZeroDivisionError:
        raise InputError('rational', s, 'expected an integer or p/q')


@dataclass
class OutputRecord(object):
    """
    Machine-readable form of a `SpectrumReport`.
    """

    space: str
    d: int
    n: int
    index: int
    nullity: int
    killing_nullity: int
    attains_lower_bound: bool
    margin: str
    entries: list = field(default_factory=list)
    schema_version: str = SCHEMA_VERSION

    @classmethod
    def from_report(cls, report):
        entries = []
        for e in report.entries:
            entries.append({
                'levels': list(e.weight.levels),
                'family': e.family,
                'casimir': format_rational(e.casimir),
                'jacobi_eigenvalue': format_rational(e.jacobi_eigenvalue),
                'dim': e.dim,
                'multiplicity': e.multiplicity,
                'class': e.classification.value,
            })

        return cls(space=report.space.name,
                   d=report.space.d,
                   n=report.space.n,
                   index=report.index,
                   nullity=report.nullity,
                   killing_nullity=report.killing_nullity,
                   attains_lower_bound=report.attains_lower_bound,
                   margin=format_rational(report.margin),
                   entries=entries)

    def to_dict(self):
        return {
            'schema_version': self.schema_version,
            'space': self.space,
            'd': self.d,
            'n': self.n,
            'index': self.index,
            'nullity': self.nullity,
            'killing_nullity': self.killing_nullity,
            'attains_lower_bound': self.attains_lower_bound,
            'margin': self.margin,
            'entries': [dict(e) for e in self.entries],
        }

    @classmethod
    def from_dict(cls, d):
        if d.get('schema_version') != SCHEMA_VERSION:
            raise InputError('schema_version', d.get('schema_version'),
                             'expected ' + SCHEMA_VERSION)

        entries = []
        for e in d['entries']:
            e = dict(e)
            for k in ('casimir', 'jacobi_eigenvalue'):
                # normalize "8" and "16/2" to "8/1"
                e[k] = format_rational(parse_rational(e[k]))
            entries.append(e)

        return cls(space=d['space'],
                   d=d['d'],
                   n=d['n'],
                   index=d['index'],
                   nullity=d['nullity'],
                   killing_nullity=d['killing_nullity'],
                   attains_lower_bound=d['attains_lower_bound'],
                   margin=format_rational(parse_rational(d['margin'])),
                   entries=entries,
                   schema_version=d['schema_version'])

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def _table_cell(x):
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return format_rational(x)


def format_text(report):
    """
    Render a report as a table: one row per contributing representation,
    followed by the totals.
    """

    space = report.space
    lines = ['{}  d={}  n={}  margin={}'.format(space.title, space.d, space.n, _table_cell(report.margin)), '']

    header = ('weight', 'family', 'casimir', 'jacobi', 'dim', 'mult', 'class')
    rows = [header]
    for e in report.entries:
        rows.append((str(e.weight),
                     e.family or '-',
                     _table_cell(e.casimir),
                     _table_cell(e.jacobi_eigenvalue),
                     str(e.dim),
                     str(e.multiplicity),
                     e.classification.value))

    widths = [max(len(r[i]) for r in rows) for i in range(len(header))]
    for r in rows:
        lines.append('  '.join(c.ljust(w) for c, w in zip(r, widths)).rstrip())

    lines.append('')
    lines.append('index:           {}'.format(report.index))
    lines.append('nullity:         {}'.format(report.nullity))
    lines.append('killing nullity: {}'.format(report.killing_nullity))
    lines.append('index = n+1:     {}'.format('yes' if report.attains_lower_bound else 'no'))
    return '\n'.join(lines)


def _margin(s):
    try:
        x = parse_rational(s)
    except InputError as e:
        raise argparse.ArgumentTypeError(e.reason)
    if x < 0:
        raise argparse.ArgumentTypeError('margin must be non-negative: ' + s)
    return x


def _positive_int(s):
    try:
        x = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError('not an integer: ' + s)
    if x <= 0:
        raise argparse.ArgumentTypeError('must be positive: ' + s)
    return x


def build_parser():
    parser = argparse.ArgumentParser(
        prog='k3focal',
        description='Index and nullity of the cubic focal manifolds CP2, HP2 and OP2.')
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='log to stderr; repeat for debug output')

    sub = parser.add_subparsers(dest='command')
    sub.required = True

    sp = sub.add_parser('spectrum', help='list the Jacobi spectrum up to 2d + margin')
    sp.add_argument('--space', required=True, choices=[s.value for s in normalization.FocalSpaceId])
    sp.add_argument('--format', default='text', choices=['text', 'json'])
    sp.add_argument('--margin', type=_margin, default=Fraction(0),
                    help='extra Casimir headroom above 2d, an integer or p/q such as 4/3')
    sp.add_argument('--dim-guard', type=_positive_int, default=None,
                    help='largest representation dimension to branch')
    sp.set_defaults(func=cmd_spectrum)

    vp = sub.add_parser('verify', help='check every published constant and result')
    vp.add_argument('--json', action='store_true', help='print a machine-readable result')
    vp.set_defaults(func=cmd_verify)

    return parser


def cmd_spectrum(args, out):
    report = jacobi.compute_spectrum(args.space, margin=args.margin, dim_guard=args.dim_guard)
    if args.format == 'json':
        out.write(OutputRecord.from_report(report).to_json() + '\n')
    else:
        out.write(format_text(report) + '\n')
    return 0


def cmd_verify(args, out):
    results = verify.run_checks()
    passed = sum(1 for r in results if r.ok)
    failed = len(results) - passed

    if args.json:
        payload = {
            'schema_version': SCHEMA_VERSION,
            'passed': passed,
            'failed': failed,
            'checks': [r.to_dict() for r in results],
        }
        out.write(json.dumps(payload, indent=2, sort_keys=True) + '\n')
    else:
        for r in results:
            out.write(str(r) + '\n')
            if not r.ok:
                out.write('    ' + r.detail + '\n')
        out.write('{} passed, {} failed\n'.format(passed, failed))

    return 0 if failed == 0 else 1


def _setup_logging(verbose):
    level = logging.WARNING
    if verbose == 1:
        level = logging.INFO
    elif verbose > 1:
        level = logging.DEBUG
    logging.basicConfig(stream=sys.stderr, level=level,
                        format='%(asctime)s %(name)s %(levelname)s %(message)s')


def main(argv=None, out=None):
    """
    Run the command line.

    Args:
        argv(list): arguments without the program name. Defaults to
            `sys.argv[1:]`.
        out: text stream for the report. Defaults to `sys.stdout`.

    Returns:
        int: exit status.
    """

    if out is None:
        out = sys.stdout

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    _setup_logging(args.verbose)

    try:
        return args.func(args, out)
    except FocalError as e:
        logger.error(repr(e) + ' while running ' + args.command)
        sys.stderr.write(str(e) + '\n')
        return 1

import io
import json
import os
import sys
import unittest
from fractions import Fraction

import k3proc
import k3ut

from k3focal import cli
from k3focal import jacobi

dd = k3ut.dd

this_base = os.path.dirname(__file__)
repo_base = os.path.dirname(os.path.abspath(this_base))


def run(*argv):
    out = io.StringIO()
    code = cli.main(list(argv), out=out)
    return code, out.getvalue()


class TestRational(unittest.TestCase):

    def test_format(self):
        cases = (
            (Fraction(8), '8/1'),
            (Fraction(-4), '-4/1'),
            (Fraction(104, 3), '104/3'),
            (Fraction(16, 2), '8/1'),
            (0, '0/1'),
        )

        for inp, expected in cases:
            self.assertEqual(expected, cli.format_rational(inp))

    def test_parse(self):
        cases = (
            ('0', Fraction(0)),
            ('4/3', Fraction(4, 3)),
            (' 2 ', Fraction(2)),
            ('-4/3', Fraction(-4, 3)),
        )

        for inp, expected in cases:
            self.assertEqual(expected, cli.parse_rational(inp))

        for bad in ('x', '1/0', '0.5.1', '0.5', '1e3', '1/2/3', ''):
            with self.assertRaises(cli.InputError):
                cli.parse_rational(bad)


class TestOutputRecord(unittest.TestCase):

    def test_roundtrip(self):
        rec = cli.OutputRecord.from_report(jacobi.compute_spectrum('hp2'))
        text = rec.to_json()
        dd(text)

        back = cli.OutputRecord.from_dict(json.loads(text))
        self.assertEqual(rec, back)
        self.assertEqual(text, back.to_json())

    def test_margin_and_family(self):
        rec = cli.OutputRecord.from_report(jacobi.compute_spectrum('cp2', margin=Fraction(4, 3)))
        d = rec.to_dict()
        self.assertEqual('4/3', d['margin'])
        self.assertEqual('(k+1)w1+(k+1)w2', d['entries'][0]['family'])

        d['margin'] = '8/6'
        self.assertEqual(rec, cli.OutputRecord.from_dict(d))

    def test_schema_version(self):
        d = cli.OutputRecord.from_report(jacobi.compute_spectrum('cp2')).to_dict()
        d['schema_version'] = '2'
        with self.assertRaises(cli.InputError):
            cli.OutputRecord.from_dict(d)


class TestSpectrum(unittest.TestCase):

    def test_cp2_json(self):
        code, out = run('spectrum', '--space', 'cp2', '--format', 'json')
        self.assertEqual(0, code)

        rec = json.loads(out)
        dd(rec)

        self.assertEqual('1', rec['schema_version'])
        self.assertEqual((8, 20, 20), (rec['index'], rec['nullity'], rec['killing_nullity']))
        self.assertTrue(rec['attains_lower_bound'])

        self.assertEqual([[1, 1], [0, 3], [3, 0]], [e['levels'] for e in rec['entries']])
        self.assertEqual(['4/1', '8/1', '8/1'], [e['casimir'] for e in rec['entries']])
        self.assertEqual(['-4/1', '0/1', '0/1'], [e['jacobi_eigenvalue'] for e in rec['entries']])
        self.assertEqual(['negative', 'null', 'null'], [e['class'] for e in rec['entries']])
        self.assertEqual(['(k+1)w1+(k+1)w2', '(k-1)w1+(k+2)w2', '(k+3)w1+kw2'],
                         [e['family'] for e in rec['entries']])
        self.assertEqual('0/1', rec['margin'])

    def test_deterministic(self):
        _, a = run('spectrum', '--space', 'op2', '--format', 'json')
        _, b = run('spectrum', '--space', 'op2', '--format', 'json')
        self.assertEqual(a, b)

    def test_op2_margin_zero(self):
        code, out = run('spectrum', '--space', 'op2', '--margin', '0', '--format', 'json')
        self.assertEqual(0, code)

        rec = json.loads(out)
        self.assertEqual([[0, 0, 0, 1], [0, 0, 1, 0]], [e['levels'] for e in rec['entries']])
        self.assertEqual([26, 273], [e['dim'] for e in rec['entries']])

    def test_hp2_text(self):
        code, out = run('spectrum', '--space', 'hp2', '--format', 'text')
        dd(out)
        self.assertEqual(0, code)

        rows = [l.split() for l in out.splitlines()]
        w2 = [r for r in rows if r and r[0] == 'w2']
        self.assertEqual(1, len(w2))
        self.assertEqual(['w2', 'kw2', '8', '-8', '14', '1', 'negative'], w2[0])

        self.assertIn('index:           14', out)
        self.assertIn('nullity:         70', out)
        self.assertIn('killing nullity: 70', out)
        self.assertIn('index = n+1:     yes', out)

    def test_text_matches_json(self):
        _, text = run('spectrum', '--space', 'cp2', '--margin', '8')
        _, js = run('spectrum', '--space', 'cp2', '--margin', '8', '--format', 'json')

        rec = json.loads(js)
        rows = [l.split() for l in text.splitlines()]
        self.assertIn('margin=8', text.splitlines()[0])
        self.assertEqual('8/1', rec['margin'])

        body = rows[rows.index(['weight', 'family', 'casimir', 'jacobi', 'dim', 'mult', 'class']) + 1:]
        body = body[:body.index([])]

        self.assertEqual(len(rec['entries']), len(body))
        for e, r in zip(rec['entries'], body):
            self.assertEqual(e['family'] or '-', r[1])
            self.assertEqual(Fraction(e['casimir']), Fraction(r[2]))
            self.assertEqual(Fraction(e['jacobi_eigenvalue']), Fraction(r[3]))
            self.assertEqual((e['dim'], e['multiplicity'], e['class']), (int(r[4]), int(r[5]), r[6]))

    def test_usage_errors(self):
        cases = (
            ('spectrum', '--space', 'rp2'),
            ('spectrum', '--space', 'cp2', '--format', 'xml'),
            ('spectrum', '--space', 'cp2', '--margin', '-1'),
            ('spectrum', '--space', 'cp2', '--margin', 'abc'),
            ('spectrum', '--space', 'cp2', '--margin', '0.5'),
            ('spectrum', '--space', 'cp2', '--dim-guard', '0'),
            ('spectrum',),
            (),
        )

        for argv in cases:
            code, out = run(*argv)
            self.assertEqual(2, code, argv)
            self.assertEqual('', out)

    def test_resource_error(self):
        code, out = run('spectrum', '--space', 'op2', '--dim-guard', '100')
        self.assertEqual(1, code)
        self.assertEqual('', out)


class TestVerify(unittest.TestCase):

    def test_verify_json(self):
        code, out = run('verify', '--json')
        self.assertEqual(0, code)

        rec = json.loads(out)
        self.assertEqual('1', rec['schema_version'])
        self.assertEqual(0, rec['failed'])
        self.assertEqual(len(rec['checks']), rec['passed'])
        self.assertEqual({'anchor', 'description', 'ok', 'detail'}, set(rec['checks'][0]))

    def test_verify_text(self):
        code, out = run('verify')
        self.assertEqual(0, code)

        lines = out.splitlines()
        self.assertTrue(all(l.endswith('... OK') for l in lines[:-1]))
        self.assertTrue(lines[-1].endswith(' passed, 0 failed'))


class TestProcess(unittest.TestCase):

    def test_module_entry(self):
        returncode, out, err = k3proc.command(
            sys.executable, '-m', 'k3focal', 'spectrum', '--space', 'cp2', '--format', 'json',
            cwd=repo_base)
        dd('returncode:', returncode)
        dd('out:', out)
        dd('err:', err)

        self.assertEqual(0, returncode)
        rec = json.loads(out)
        self.assertEqual(8, rec['index'])
        self.assertEqual(20, rec['nullity'])

    def test_usage_exit(self):
        returncode, out, err = k3proc.command(
            sys.executable, '-m', 'k3focal', 'spectrum', '--space', 'rp2',
            cwd=repo_base)

        self.assertEqual(2, returncode)
        self.assertEqual('', out)
        self.assertIn('usage:', err)

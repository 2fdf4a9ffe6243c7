import json
from fractions import Fraction
from unittest import TestCase

import click

from aristo.errors import NotDistributive
from aristo.report import Report, Verdict, OutputFormat, report_to_json, \
    report_lines, format_witness, to_json_value, emit, REPORT_SCHEMA_VERSION
from tests.utils import capturing_stdout


class TestVerdict(TestCase):
    def test_exit_codes(self):
        self.assertEqual(Verdict.Holds.exit_code, 0)
        self.assertEqual(Verdict.Value.exit_code, 0)
        self.assertEqual(Verdict.Fails.exit_code, 1)
        self.assertEqual(Verdict.Error.exit_code, 2)

    def test_from_holds(self):
        self.assertEqual(Verdict.from_holds(True), Verdict.Holds)
        self.assertEqual(Verdict.from_holds(False), Verdict.Fails)


class TestJsonValues(TestCase):
    def test_rationals_are_strings(self):
        self.assertEqual(to_json_value(Fraction(-3, 4)), '-3/4')
        self.assertEqual(to_json_value(Fraction(6, 3)), '2')

    def test_sets_are_sorted(self):
        self.assertEqual(
            to_json_value(frozenset({'q', 'p', 'r'})), ['p', 'q', 'r'])

    def test_serialisable_values(self):
        self.assertEqual(
            to_json_value({'mode': Verdict.Fails}), {'mode': 'fails'})


class TestReport(TestCase):
    def test_from_error(self):
        report = Report.from_error('lattice check', NotDistributive(
            "Not distributive", witness=('a', 'b', 'c')))
        self.assertEqual(report.verdict, Verdict.Error)
        self.assertEqual(report.exit_code, 2)
        self.assertEqual(report.witness, ('a', 'b', 'c'))
        self.assertEqual(report.details, {'error': 'NotDistributive'})
        self.assertEqual(report.note, "Not distributive")

    def test_json_is_sorted_and_stable(self):
        report = Report(
            'axioms check', Verdict.Fails, witness={'divisibility': ('a',)},
            details={'z': 1, 'a': [Fraction(1, 2)]}, mode='corrected',
            seed=7)
        text = report_to_json(report)
        self.assertEqual(text, report_to_json(report))
        parsed = json.loads(text)
        self.assertEqual(list(parsed), sorted(parsed))
        self.assertEqual(parsed['schema_version'], REPORT_SCHEMA_VERSION)
        self.assertEqual(parsed['witness'], {'divisibility': ['a']})
        self.assertEqual(parsed['details'], {'z': 1, 'a': ['1/2']})

    def test_deserialise(self):
        report = Report(
            'line divide', Verdict.Value, value=['(0, 1/2)', '(1/2, 1)'])
        self.assertEqual(
            Report.deserialise(json.loads(report_to_json(report))), report)


class TestTextOutput(TestCase):
    def test_format_witness(self):
        self.assertEqual(
            format_witness(('{p,q}', ('{p}', '{q}'))), '({p,q}, ({p}, {q}))')

    def test_lines(self):
        lines = list(map(click.unstyle, report_lines(Report(
            'sheaf stalk', Verdict.Value, value=('s1', 's2'),
            details={'trace': ['first', 'second'], 'checked': 3}))))
        self.assertEqual(lines, [
            'sheaf stalk: value (s1, s2)',
            '  trace:',
            '    first',
            '    second',
            '  checked: 3',
        ])

    def test_emit_json(self):
        report = Report('nil derive', Verdict.Value, value=Fraction(10))
        with capturing_stdout(color=False) as captured:
            emit(report, OutputFormat.Json)
        self.assertEqual(json.loads(captured.getvalue())['value'], '10')

    def test_emit_text(self):
        with capturing_stdout(color=False) as captured:
            emit(Report('line compact', Verdict.Holds))
        self.assertEqual(captured.getvalue(), 'line compact: holds\n')

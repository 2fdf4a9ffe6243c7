"""
Writing reports to the console, either as a readable summary or as JSON.
"""
from enum import auto
from typing import Any, List

import click

from aristo.report.report import Report, report_to_json, to_json_value
from aristo.styling.shortcuts import e_verdict, e_value, e_witness, e_error
from aristo.utils import StringEnum

__all__ = ['OutputFormat', 'format_witness', 'report_lines', 'emit']


class OutputFormat(StringEnum):
    Text = auto()
    Json = auto()

    @classmethod
    def from_flag(cls, json_output: bool) -> 'OutputFormat':
        return cls.Json if json_output else cls.Text


def format_witness(witness: Any) -> str:
    """
    Show a witness as a tuple, without quoting the labels in it

    >>> format_witness(('1', '0'))
    '(1, 0)'
    >>> format_witness([['(0, 1)', '(0, 1/2)', '(1/2, 1)']])
    '((0, 1), (0, 1/2), (1/2, 1))'
    >>> format_witness({'p': 'a'})
    '{p: a}'
    >>> format_witness(None)
    '-'
    """
    witness = to_json_value(witness)
    if witness is None:
        return '-'
    if isinstance(witness, list):
        return f"({', '.join(map(format_witness, witness))})"
    if isinstance(witness, dict):
        items = ', '.join(
            f"{key}: {format_witness(value)}"
            for key, value in witness.items()
        )
        return f"{{{items}}}"
    return str(witness)


def report_lines(report: Report) -> List[str]:
    """
    >>> from aristo.report.report import Verdict
    >>> print(click.unstyle("\\n".join(report_lines(Report(
    ...     'axioms check', Verdict.Fails, witness=('1', '0'),
    ...     note="degenerate", mode='as-written')))))
    axioms check: fails
      witness: (1, 0)
      note: degenerate
      mode: as-written
    """
    verdict = report.verdict.value
    header = f"{report.command}: {e_verdict(verdict)}"
    if report.value is not None:
        header += f" {e_value(format_witness(report.value))}"
    lines = [header]
    if report.witness is not None:
        lines.append(f"  witness: {e_witness(format_witness(report.witness))}")
    for key, value in report.details.items():
        value = to_json_value(value)
        if isinstance(value, list) and value \
                and all(isinstance(item, str) for item in value):
            lines.append(f"  {key}:")
            lines.extend(f"    {item}" for item in value)
        else:
            lines.append(f"  {key}: {format_witness(value)}")
    if report.note:
        note = e_error(report.note) if verdict == 'error' else report.note
        lines.append(f"  note: {note}")
    if report.mode is not None:
        lines.append(f"  mode: {report.mode}")
    if report.seed is not None:
        lines.append(f"  seed: {report.seed}")
    return lines


def emit(report: Report, output_format: OutputFormat = OutputFormat.Text
         ) -> None:
    if output_format == OutputFormat.Json:
        click.echo(report_to_json(report))
        return
    for line in report_lines(report):
        click.echo(line)

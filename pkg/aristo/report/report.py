"""
The outcome of a single command, as shown on the console or as JSON.
"""
import json
from dataclasses import dataclass, field
from enum import auto, Enum
from fractions import Fraction
from typing import Any, Dict, Optional

from aristo.errors import AristoError
from aristo.utils import StringEnum

__all__ = [
    'REPORT_SCHEMA_VERSION', 'Verdict', 'Report', 'to_json_value',
    'report_to_json',
]

REPORT_SCHEMA_VERSION = 1


class Verdict(StringEnum):
    Holds = auto()
    Fails = auto()
    Value = auto()
    Error = auto()

    @property
    def exit_code(self) -> int:
        """
        >>> [verdict.exit_code for verdict in Verdict]
        [0, 1, 0, 2]
        """
        return {
            Verdict.Holds: 0,
            Verdict.Fails: 1,
            Verdict.Value: 0,
            Verdict.Error: 2,
        }[self]

    @classmethod
    def from_holds(cls, holds: bool) -> 'Verdict':
        return cls.Holds if holds else cls.Fails


def to_json_value(value: Any) -> Any:
    """
    Convert a result to plain JSON values: tuples become lists, sets become
    sorted lists, and rationals become strings

    >>> to_json_value((Fraction(1, 2), {'b', 'a'}, {'x': (1, None)}))
    ['1/2', ['a', 'b'], {'x': [1, None]}]
    """
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return str(value)
    if isinstance(value, Enum):
        return value.value
    if hasattr(value, 'serialise'):
        return to_json_value(value.serialise())
    if isinstance(value, dict):
        return {
            str(key): to_json_value(item)
            for key, item in value.items()
        }
    if isinstance(value, (set, frozenset)):
        return sorted(map(to_json_value, value), key=str)
    if isinstance(value, (list, tuple)):
        return list(map(to_json_value, value))
    return str(value)


@dataclass(frozen=True)
class Report:
    """
    What a command found: a verdict, an optional value, the witness that
    explains the verdict, and any extra details

    >>> report = Report('nil derive', Verdict.Value, value=Fraction(10))
    >>> report.exit_code, report.serialise()['value']
    (0, '10')
    >>> Report.deserialise(report.serialise()) == Report.deserialise(
    ...     json.loads(report_to_json(report)))
    True
    """
    command: str
    verdict: Verdict
    value: Any = None
    witness: Any = None
    details: Dict[str, Any] = field(default_factory=dict)
    note: Optional[str] = None
    mode: Optional[str] = None
    seed: Optional[int] = None
    schema_version: int = REPORT_SCHEMA_VERSION

    @classmethod
    def from_error(cls, command: str, error: AristoError) -> 'Report':
        """
        >>> from aristo.errors import UnknownElement
        >>> report = Report.from_error(
        ...     'lattice meet', UnknownElement("Unknown element 'z'", ('z',)))
        >>> report.exit_code, report.witness, report.details
        (2, ('z',), {'error': 'UnknownElement'})
        """
        return cls(
            command=command,
            verdict=Verdict.Error,
            witness=error.witness,
            details={'error': type(error).__name__},
            note=error.message,
        )

    @classmethod
    def deserialise(cls, serialised: dict) -> 'Report':
        return cls(
            command=serialised['command'],
            verdict=Verdict(serialised['verdict']),
            value=serialised.get('value'),
            witness=serialised.get('witness'),
            details=serialised.get('details') or {},
            note=serialised.get('note'),
            mode=serialised.get('mode'),
            seed=serialised.get('seed'),
            schema_version=serialised['schema_version'],
        )

    @property
    def exit_code(self) -> int:
        return self.verdict.exit_code

    def serialise(self) -> dict:
        return {
            'schema_version': self.schema_version,
            'command': self.command,
            'verdict': self.verdict.value,
            'value': to_json_value(self.value),
            'witness': to_json_value(self.witness),
            'details': to_json_value(self.details),
            'note': self.note,
            'mode': self.mode,
            'seed': self.seed,
        }


def report_to_json(report: Report) -> str:
    """
    >>> print(report_to_json(Report('lattice check', Verdict.Holds)))
    {
      "command": "lattice check",
      "details": {},
      "mode": null,
      "note": null,
      "schema_version": 1,
      "seed": null,
      "value": null,
      "verdict": "holds",
      "witness": null
    }
    """
    return json.dumps(report.serialise(), sort_keys=True, indent=2)

from dataclasses import dataclass
from enum import auto
from typing import Any, Optional, Tuple

from aristo.utils import StringEnum

__all__ = ['Axiom', 'AxiomMode', 'AxiomReport']


class Axiom(StringEnum):
    GlobalConnectivity = auto()
    LocalConnectivity = auto()
    Divisibility = auto()


class AxiomMode(StringEnum):
    """
    `AsWritten` evaluates the displayed formulas literally, and `Corrected`
    adds the side conditions that the prose reading needs

    >>> AxiomMode.parse('as-written'), AxiomMode.Corrected.dashed
    (<AxiomMode.AsWritten: 'as_written'>, 'corrected')
    """
    AsWritten = auto()
    Corrected = auto()


@dataclass(frozen=True)
class AxiomReport:
    """
    The verdict of checking one axiom in one mode

    There is always a witness when the axiom fails; a witness on success
    explains how it was satisfied (eg the splits found on the line).

    >>> AxiomReport(Axiom.Divisibility, AxiomMode.Corrected, False, ('a',))\\
    ...     .serialise()
    {'axiom': 'divisibility', 'mode': 'corrected', 'holds': False,
        'witness': ['a'], 'note': None}
    >>> AxiomReport(Axiom.Divisibility, AxiomMode.Corrected, False)
    Traceback (most recent call last):
    ...
    ValueError: A failing divisibility report needs a witness
    """
    axiom: Axiom
    mode: AxiomMode
    holds: bool
    witness: Optional[Tuple[Any, ...]] = None
    note: Optional[str] = None

    def __post_init__(self):
        if not self.holds and self.witness is None:
            raise ValueError(
                f"A failing {self.axiom.value} report needs a witness")

    @property
    def verdict(self) -> str:
        return 'holds' if self.holds else 'fails'

    def serialise(self) -> dict:
        return {
            'axiom': self.axiom.value,
            'mode': self.mode.value,
            'holds': self.holds,
            'witness': (
                None if self.witness is None
                else [
                    list(item) if isinstance(item, tuple) else item
                    for item in self.witness
                ]
            ),
            'note': self.note,
        }

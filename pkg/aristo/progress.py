"""
Throttled progress output for the long exhaustive scans (validity, countermodel
search, gluing, line sampling).

Progress is written to stderr, so that reports on stdout stay byte-identical
between runs.
"""
import timeit
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, TypeVar

import click

__all__ = ['ProgressReporter', 'DummyClock', 'silent_progress']

T = TypeVar('T')


class DummyClock:
    """
    A fake clock for tests: it advances by a fixed increment on each call.

    >>> clock = DummyClock(start=2, increment=3)
    >>> [clock(), clock(), clock()]
    [2, 5, 8]
    """
    def __init__(self, start: float = 0, increment: float = 1):
        self.next_value = start
        self.increment = increment

    def __repr__(self) -> str:
        return f"DummyClock({self.next_value}, {self.increment})"

    def __call__(self) -> float:
        value = self.next_value
        self.next_value += self.increment
        return value


@dataclass
class ProgressReporter:
    """
    Counts steps of a scan, and reports them at most once every
    `min_report_interval_seconds`.

    >>> progress = ProgressReporter(
    ...     clock=DummyClock(), min_report_interval_seconds=2, to_stdout=True)
    >>> for _ in progress.stepping(range(3)):
    ...     _ = progress.report_if("checked", progress.step_count)
    checked 1
    checked 3
    >>> progress.step_count
    3
    >>> ProgressReporter(enabled=False).report("not shown").step_count
    0
    """
    enabled: bool = True
    min_report_interval_seconds: float = 5
    clock: Callable[[], float] = timeit.default_timer
    label: str = ""
    to_stdout: bool = False
    step_count: int = 0
    start_time: Optional[float] = None
    last_report_time: Optional[float] = None

    def __post_init__(self):
        if self.start_time is None:
            self.start_time = self.clock()

    def __bool__(self) -> bool:
        """
        >>> bool(ProgressReporter()), bool(ProgressReporter(enabled=False))
        (True, False)
        """
        return self.enabled

    def step(self, step_count: int = 1) -> 'ProgressReporter':
        self.step_count += step_count
        return self

    def stepping(self, items: Iterable[T]) -> Iterable[T]:
        """Step once for every item"""
        for item in items:
            self.step()
            yield item

    def should_report(self) -> bool:
        if self.last_report_time is None:
            return True
        return (
            self.clock() - self.last_report_time
            >= self.min_report_interval_seconds
        )

    def report(self, *args) -> 'ProgressReporter':
        if self.enabled and args:
            message = " ".join(map(str, args))
            if self.label:
                message = f"[{self.label}] {message}"
            click.echo(message, err=not self.to_stdout)
        self.last_report_time = self.clock()
        return self

    def report_if(self, *args) -> 'ProgressReporter':
        """Report only if enough time has passed since the last report"""
        if not self.enabled or not self.should_report():
            return self
        return self.report(*args)

    def sub_reporter(self, label: str) -> 'ProgressReporter':
        cls = type(self)
        # noinspection PyArgumentList
        return cls(
            enabled=self.enabled,
            min_report_interval_seconds=self.min_report_interval_seconds,
            clock=self.clock,
            label=label,
            to_stdout=self.to_stdout,
        )


def silent_progress() -> ProgressReporter:
    """A reporter that counts but never prints"""
    return ProgressReporter(enabled=False)

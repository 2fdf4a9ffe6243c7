"""
Divisibility on the line, checked on sample regions with explicit splits.
"""
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence

from aristo.axioms.axiom_report import Axiom, AxiomMode, AxiomReport
from aristo.errors import EmptySampleRegion
from aristo.line import (
    OpenRegion, divide, divide_at_point, interval_midpoint, region_meet,
    region_join, region_leq, region_is_dense_in, region_boundary,
    format_rational, parse_rational, NEG_INF, POS_INF,
)
from aristo.progress import ProgressReporter, silent_progress

__all__ = [
    'probe_subregions', 'is_dense_by_probing', 'split_for_divisibility',
    'check_divisibility_line', 'check_point_divisibility_line',
]


def probe_subregions(region: OpenRegion) -> List[OpenRegion]:
    """
    The non-empty single intervals inside the region, with endpoints among
    its endpoints and midpoints

    >>> probes = probe_subregions(OpenRegion.parse("(0, 1)"))
    >>> len(probes), str(probes[0]), str(probes[-1])
    (10, '(0, 1/4)', '(3/4, 1)')
    """
    candidates = {NEG_INF, POS_INF}
    for low, high in region.intervals:
        middle = interval_midpoint(low, high)
        candidates.update((
            low, high, middle,
            interval_midpoint(low, middle), interval_midpoint(middle, high),
        ))
    ordered = sorted(candidates)
    probes = []
    for index, low in enumerate(ordered):
        for high in ordered[index + 1:]:
            probe = region_meet(OpenRegion(((low, high),)), region)
            if probe and len(probe.intervals) == 1 and probe not in probes:
                probes.append(probe)
    return probes


def is_dense_by_probing(inner: OpenRegion, outer: OpenRegion) -> bool:
    return all(
        region_meet(probe, inner)
        for probe in probe_subregions(outer)
    )


def split_for_divisibility(region: OpenRegion):
    """
    Split at the midpoint of the first interval

    >>> list(map(str, split_for_divisibility(OpenRegion.full())))
    ['(-inf, 0)', '(0, +inf)']
    """
    if not region:
        raise EmptySampleRegion("Can't divide an empty region")
    low, high = region.intervals[0]
    return divide(region, interval_midpoint(low, high))


def _split_problem(region: OpenRegion, w: OpenRegion, v: OpenRegion
                   ) -> Optional[str]:
    if region_meet(w, v):
        return "parts overlap"
    if not w or not v:
        return "a part is empty"
    if not (region_leq(w, region) and region_leq(v, region)):
        return "a part is not inside the region"
    joined = region_join(w, v)
    if not region_is_dense_in(joined, region):
        return "the join is not dense"
    if not is_dense_by_probing(joined, region):
        return "the join misses a probe"
    return None


def check_divisibility_line(samples: Iterable[OpenRegion],
                            progress: Optional[ProgressReporter] = None,
                            ) -> AxiomReport:
    """
    >>> check_divisibility_line([OpenRegion.parse("(0, 1)")]).witness
    (('(0, 1)', '(0, 1/2)', '(1/2, 1)'),)
    >>> check_divisibility_line([OpenRegion.empty()])
    Traceback (most recent call last):
    ...
    aristo.errors.EmptySampleRegion: ...
    """
    if progress is None:
        progress = silent_progress()
    splits = []
    for region in progress.stepping(samples):
        progress.report_if(
            f"Checked {progress.step_count - 1} regions, next is {region}")
        w, v = split_for_divisibility(region)
        problem = _split_problem(region, w, v)
        if problem is not None:
            return AxiomReport(
                Axiom.Divisibility, AxiomMode.Corrected, False,
                (str(region), str(w), str(v)), problem)
        splits.append((str(region), str(w), str(v)))
    return AxiomReport(
        Axiom.Divisibility, AxiomMode.Corrected, True, tuple(splits))


def check_point_divisibility_line(points: Sequence) -> AxiomReport:
    """
    Every point divides the line into two disjoint rays, whose join is dense,
    and the point is on the boundary of both

    >>> check_point_divisibility_line(["0", "1/2"]).witness
    (('0', '(-inf, 0)', '(0, +inf)'), ('1/2', '(-inf, 1/2)', '(1/2, +inf)'))
    """
    splits = []
    for point in map(parse_rational, points):
        w, v = divide_at_point(point)
        label = format_rational(point)
        problem = _split_problem(OpenRegion.full(), w, v)
        if problem is None and not (
                _on_boundary(point, w) and _on_boundary(point, v)):
            problem = "the point is not on the boundary of both parts"
        if problem is not None:
            return AxiomReport(
                Axiom.Divisibility, AxiomMode.Corrected, False,
                (label, str(w), str(v)), problem)
        splits.append((label, str(w), str(v)))
    return AxiomReport(
        Axiom.Divisibility, AxiomMode.Corrected, True, tuple(splits))


def _on_boundary(point: Fraction, region: OpenRegion) -> bool:
    return point in region_boundary(region)

"""
Reading the inputs of commands: JSON files, and the short names and inline
forms that the command line accepts instead of a file.

Anything that can't be read raises `InputParseError`, so that the command ends
with a malformed-input report.
"""
import json
import re
from contextlib import contextmanager
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Tuple

from aristo.errors import AristoError, InputParseError
from aristo.lattice import HeytingAlgebra, chain, boolean_algebra, diamond, \
    pentagon
from aristo.line import OpenRegion, PiecewiseFn, Polynomial, \
    absolute_value, heaviside
from aristo.sheaf import Presheaf, constant_presheaf, functions_sheaf, \
    sierpinski_presheaf
from aristo.space import FiniteSpace, PointMap, sierpinski, discrete, coarse, \
    all_spaces_up_to_homeomorphism
from aristo.space.enumeration import default_points

__all__ = [
    'deserialising', 'load_json', 'load_lattice', 'load_space',
    'load_point_map', 'load_region', 'load_regions', 'load_piecewise',
    'load_presheaf', 'split_points', 'parse_assignments',
]

RE_NAMED_ALGEBRA = re.compile(r'^(chain|boolean|opens)-(\d+)(?:-(\d+))?$')
RE_NAMED_SPACE = re.compile(r'^(discrete|coarse)-(\d+)$')


@contextmanager
def deserialising(file: Optional[str] = None, what: str = 'input'):
    """
    Turn the errors of reading badly-shaped JSON into `InputParseError`

    >>> with deserialising('lattice.json', 'a lattice'):
    ...     {}['elements']
    Traceback (most recent call last):
    ...
    aristo.errors.InputParseError: Could not read a lattice from lattice.json:
        missing 'elements'
    """
    try:
        yield
    except AristoError:
        raise
    except KeyError as e:
        raise InputParseError(
            f"Could not read {what} from {file or 'the input'}: missing {e}",
            file=file)
    except (TypeError, ValueError, AttributeError) as e:
        raise InputParseError(
            f"Could not read {what} from {file or 'the input'}: {e}",
            file=file)


def load_json(path: str) -> Any:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise InputParseError(
            f"Could not read {path}: {e.strerror}", file=path)
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputParseError(
            f"Invalid JSON in {path}: {e.msg}", file=path,
            position=f"line {e.lineno} column {e.colno}")


def _is_file(text: str) -> bool:
    return text.endswith('.json') or Path(text).is_file()


def load_lattice(source: str) -> HeytingAlgebra:
    """
    A lattice from a JSON file, or a named one: `chain-N`, `boolean-N` (with
    `N` elements), `diamond`, `pentagon`, or `opens-N-I` (the opens of the
    `I`-th space with `N` points)

    >>> load_lattice("chain-3").elements
    ('0', 'a', '1')
    >>> len(load_lattice("boolean-4")), len(load_lattice("chain-1"))
    (4, 1)
    >>> load_lattice("boolean-3")
    Traceback (most recent call last):
    ...
    aristo.errors.InputParseError: ...
    """
    if _is_file(source):
        serialised = load_json(source)
        with deserialising(source, 'a lattice'):
            return HeytingAlgebra.deserialise(serialised)
    if source == 'diamond':
        return diamond()
    if source == 'pentagon':
        return pentagon()
    match = RE_NAMED_ALGEBRA.match(source)
    if match:
        family, first, second = match.groups()
        size = int(first)
        if family == 'chain' and second is None and size >= 1:
            return chain(size)
        if family == 'boolean' and second is None and size >= 2 \
                and size & (size - 1) == 0:
            return boolean_algebra(size.bit_length() - 1)
        if family == 'opens' and second is not None and 1 <= size <= 4:
            spaces = all_spaces_up_to_homeomorphism(size)
            if int(second) < len(spaces):
                return spaces[int(second)].opens_lattice()
    raise InputParseError(
        f"'{source}' is neither a JSON file nor a known lattice",
        file=source)


def load_space(source: str) -> FiniteSpace:
    """
    A space from a JSON file, or a named one: `sierpinski`, `discrete-N` or
    `coarse-N`

    >>> load_space("sierpinski") == sierpinski()
    True
    >>> len(load_space("discrete-2").opens), len(load_space("coarse-3").opens)
    (4, 2)
    """
    if _is_file(source):
        serialised = load_json(source)
        with deserialising(source, 'a space'):
            return FiniteSpace.deserialise(serialised)
    if source == 'sierpinski':
        return sierpinski()
    match = RE_NAMED_SPACE.match(source)
    if match:
        family, size = match.group(1), int(match.group(2))
        if 1 <= size <= 8:
            points = default_points(size)
            return discrete(points) if family == 'discrete' \
                else coarse(points)
    raise InputParseError(
        f"'{source}' is neither a JSON file nor a known space", file=source)


def load_point_map(source: str, domain: FiniteSpace, codomain: FiniteSpace
                   ) -> PointMap:
    """
    A map from a JSON file like `{"map": {"p": "q"}}`, or inline as `p=q,q=p`

    >>> load_point_map("p=q,q=q", sierpinski(), sierpinski()).mapping
    {'p': 'q', 'q': 'q'}
    """
    if _is_file(source):
        serialised = load_json(source)
        with deserialising(source, 'a map'):
            mapping = {
                str(key): str(value)
                for key, value in serialised["map"].items()
            }
    else:
        mapping = parse_assignments(source.split(','))
    return PointMap.build(domain, codomain, mapping)


def load_region(source: str) -> OpenRegion:
    """
    A region from a JSON file, or inline like `(0, 1) u (2, +inf)`

    >>> str(load_region("(0,1) u (1,2)"))
    '(0, 1) u (1, 2)'
    """
    if _is_file(source):
        serialised = load_json(source)
        with deserialising(source, 'a region'):
            return OpenRegion.deserialise(serialised)
    return OpenRegion.parse(source)


def load_regions(path: str) -> List[OpenRegion]:
    """A JSON file with a list of regions"""
    serialised = load_json(path)
    if not isinstance(serialised, list):
        raise InputParseError(
            f"Expected a list of regions in {path}", file=path)
    with deserialising(path, 'the regions'):
        return list(map(OpenRegion.deserialise, serialised))


def load_piecewise(source: str) -> PiecewiseFn:
    """
    A piecewise function from a JSON file, one of `abs` and `step`, or a
    polynomial given by its constant-first coefficients

    >>> load_piecewise("abs")(-3)
    Fraction(3, 1)
    >>> load_piecewise("-1,2")(1)
    Fraction(1, 1)
    """
    if _is_file(source):
        serialised = load_json(source)
        with deserialising(source, 'a piecewise function'):
            return PiecewiseFn.deserialise(serialised)
    if source == 'abs':
        return absolute_value()
    if source == 'step':
        return heaviside()
    return PiecewiseFn.polynomial(Polynomial.parse(source))


def load_presheaf(source: str) -> Presheaf:
    """
    A presheaf from a JSON file, or one of: `sierpinski`, `constant` (the
    constant presheaf with values 0 and 1 on two separate points), and
    `functions` (all functions to 0 and 1, on the same space)

    >>> load_presheaf("constant").sections_at("{p,q}")
    ('0', '1')
    """
    if _is_file(source):
        serialised = load_json(source)
        with deserialising(source, 'a presheaf'):
            return Presheaf.deserialise(serialised)
    if source == 'sierpinski':
        return sierpinski_presheaf()
    if source == 'constant':
        return constant_presheaf(discrete(['p', 'q']), ['0', '1'])
    if source == 'functions':
        return functions_sheaf(discrete(['p', 'q']), ['0', '1'])
    raise InputParseError(
        f"'{source}' is neither a JSON file nor a known presheaf",
        file=source)


def split_points(text: Optional[str]) -> Tuple[str, ...]:
    """
    >>> split_points("p, q"), split_points(""), split_points("{p,q}")
    (('p', 'q'), (), ('p', 'q'))
    """
    if not text:
        return ()
    text = text.strip()
    if text.startswith('{') and text.endswith('}'):
        text = text[1:-1]
    return tuple(
        point.strip()
        for point in text.split(',')
        if point.strip()
    )


def parse_assignments(items: Iterable[str]) -> Dict[str, str]:
    """
    >>> parse_assignments(["p=a", " q = 1 "])
    {'p': 'a', 'q': '1'}
    >>> parse_assignments(["p"])
    Traceback (most recent call last):
    ...
    aristo.errors.InputParseError: Expected 'name=value', not 'p'
    """
    assignments = {}
    for item in items:
        name, separator, value = item.partition('=')
        if not separator or not name.strip():
            raise InputParseError(
                f"Expected 'name=value', not '{item}'", position=item)
        assignments[name.strip()] = value.strip()
    return assignments

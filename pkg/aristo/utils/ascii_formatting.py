from typing import Sequence, List, Tuple

__all__ = ['join_rows', 'align_rows']


def join_rows(rows: Sequence[Sequence[str]], column_separator: str = ' | ',
              left_pad: str = '| ', right_pad: str = ' |',
              line_separator: str = '\n') -> str:
    """
    Render an aligned ASCII table, eg an operation table of an algebra

    >>> print(join_rows([]))
    <BLANKLINE>
    >>> print(join_rows([
    ...     ('=>', '0', 'a', '1'),
    ...     ('0', '1', '1', '1'),
    ...     ('a', '0', '1', '1'),
    ...     ('1', '0', 'a', '1'),
    ... ]))
    | => | 0 | a | 1 |
    | 0  | 1 | 1 | 1 |
    | a  | 0 | 1 | 1 |
    | 1  | 0 | a | 1 |
    """
    return line_separator.join(
        f"{left_pad}{column_separator.join(row)}{right_pad}"
        for row in align_rows(rows)
    )


def align_rows(rows: Sequence[Sequence[str]]) -> List[Tuple[str, ...]]:
    """
    Pad every cell to the width of its column

    >>> align_rows([('(0, 1)', 'C2'), ('{1}', 'C0')])
    [('(0, 1)', 'C2'), ('{1}   ', 'C0')]
    >>> align_rows([('a',), ('b', 'c')])
    Traceback (most recent call last):
    ...
    ValueError: Expected rows of equal size but got multiple sizes: 1, 2
    """
    if not rows:
        return []
    row_sizes = set(map(len, rows))
    if len(row_sizes) != 1:
        raise ValueError(
            f"Expected rows of equal size but got multiple sizes: "
            f"{', '.join(map(str, sorted(row_sizes)))}")

    column_lengths = tuple(
        max(map(len, column))
        for column in zip(*rows)
    )
    return [
        tuple(
            cell.ljust(column_length)
            for column_length, cell in zip(column_lengths, row)
        )
        for row in rows
    ]

"""
Shortcuts for styling parts of text in console reports.
"""

import functools

import click

__all__ = [
    'make_colour', 'e_error', 'e_warn', 'e_holds', 'e_fails', 'e_value',
    'e_witness', 'e_suggest', 'e_verdict',
]


def make_colour(**colour_kwargs):
    """
    Create a colour shortcut

    >>> make_colour(fg='red')('fails')
    '\\x1b[31mfails\\x1b[0m'
    >>> make_colour(fg='red')('fails', fg='green')
    '\\x1b[32mfails\\x1b[0m'
    >>> make_colour(bold=True)('1/2')
    '\\x1b[1m1/2\\x1b[0m'
    """
    @functools.wraps(click.style)
    def custom_style(*args, **kwargs):
        return click.style(*args, **{**colour_kwargs, **kwargs})

    return custom_style


e_error = make_colour(fg='red')
e_warn = make_colour(fg='yellow')
e_holds = make_colour(fg='green')
e_fails = make_colour(fg='red', bold=True)

e_value = make_colour(fg='blue', bold=True)
e_witness = make_colour(fg='magenta')
e_suggest = make_colour(fg='cyan', underline=True)


def e_verdict(verdict: str) -> str:
    """
    Colour a report verdict by its meaning

    >>> e_verdict('holds') == e_holds('holds')
    True
    >>> e_verdict('fails') == e_fails('fails')
    True
    >>> e_verdict('value') == e_value('value')
    True
    """
    if verdict == 'holds':
        return e_holds(verdict)
    if verdict == 'fails':
        return e_fails(verdict)
    return e_value(verdict)

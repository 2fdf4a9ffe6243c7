"""
Formulas are parsed with `parsec` combinators, in two passes: characters into
tokens, and tokens into a formula.

Precedence, from tightest: `~`, `&`, `|`, `->` (right associative), `<->`
(not associative). The constants are `top` and `bot`.
"""
from dataclasses import dataclass
from string import ascii_letters, digits
from typing import List

from parsec import (
    BasicState, Parsec, ParsecError, attempt, between, choice, choices, many,
    one_of, pack, string,
)
from parsec.text import skip_spaces

from aristo.errors import FormulaSyntaxError
from aristo.logic.formula import (
    Formula, Atom, Top, Bottom, And, Or, Implies, negate, biconditional,
)

__all__ = ['parse_formula', 'tokenize', 'Token']


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    position: int

    def describe(self) -> str:
        if self.kind == 'end':
            return 'the end'
        return f"'{self.text}'"


OPERATOR_KINDS = {
    '<->': 'biconditional',
    '->': 'implies',
    '~': 'not',
    '&': 'and',
    '|': 'or',
    '(': 'open',
    ')': 'close',
}
CONSTANTS = {'top': Top, 'bot': Bottom}

NAME_START = ascii_letters + '_'
NAME_PART = NAME_START + digits

name = one_of(NAME_START).bind(
    lambda first: many(one_of(NAME_PART)).bind(
        lambda rest: pack(first + ''.join(rest))))
operator = choices(
    attempt(string('<->')), attempt(string('->')), one_of('~&|()'))


@Parsec
def lexeme(state: BasicState) -> Token:
    skip_spaces(state)
    position = state.index
    text = choice(attempt(name), operator)(state)
    return Token(OPERATOR_KINDS.get(text, 'name'), text, position)


@Parsec
def end_of_text(state: BasicState) -> Token:
    skip_spaces(state)
    if state.index < len(state.data):
        raise ParsecError(
            state, f"Unexpected character '{state.data[state.index]}'")
    return Token('end', '', state.index)


def tokenize(text: str) -> List[Token]:
    """
    >>> [token.kind for token in tokenize("~p -> (q <-> top)")]
    ['not', 'name', 'implies', 'open', 'name', 'biconditional', 'name',
        'close', 'end']
    >>> tokenize("p $ q")
    Traceback (most recent call last):
    ...
    aristo.errors.FormulaSyntaxError: Unexpected character '$' at 2
    >>> tokenize("p <- q")
    Traceback (most recent call last):
    ...
    aristo.errors.FormulaSyntaxError: Unexpected character '<' at 2
    """
    state = BasicState(text)
    try:
        tokens = many(lexeme)(state)
        tokens.append(end_of_text(state))
    except ParsecError as error:
        raise FormulaSyntaxError(
            f"{error.message} at {error.index}", error.index) from error
    return tokens


def token(kind: str, expected: str) -> Parsec:
    @Parsec
    def call(state: BasicState) -> Token:
        found = state.next()
        if found.kind != kind:
            raise ParsecError(
                state, f"Expected {expected} but found {found.describe()}")
        return found

    return call


def optional(kind: str) -> Parsec:
    return choice(attempt(token(kind, kind)), pack(None))


@Parsec
def constant_or_atom(state: BasicState) -> Formula:
    found = token('name', "a formula")(state)
    if found.text in CONSTANTS:
        return CONSTANTS[found.text]()
    return Atom(found.text)


@Parsec
def primary(state: BasicState) -> Formula:
    parenthesised = between(
        token('open', "a formula"), token('close', "')'"), equivalence)
    return choice(attempt(constant_or_atom), parenthesised)(state)


@Parsec
def negation(state: BasicState) -> Formula:
    if optional('not')(state):
        return negate(negation(state))
    return primary(state)


@Parsec
def conjunction(state: BasicState) -> Formula:
    formula = negation(state)
    while optional('and')(state):
        formula = And(formula, negation(state))
    return formula


@Parsec
def disjunction(state: BasicState) -> Formula:
    formula = conjunction(state)
    while optional('or')(state):
        formula = Or(formula, conjunction(state))
    return formula


@Parsec
def implication(state: BasicState) -> Formula:
    formula = disjunction(state)
    if optional('implies')(state):
        return Implies(formula, implication(state))
    return formula


@Parsec
def equivalence(state: BasicState) -> Formula:
    formula = implication(state)
    if not optional('biconditional')(state):
        return formula
    formula = biconditional(formula, implication(state))
    if optional('biconditional')(state):
        raise ParsecError(
            state, "Expected parentheses around '<->' but found '<->'")
    return formula


whole_formula = equivalence.over(token('end', "an operator or the end"))


def parse_formula(text: str) -> Formula:
    """
    >>> from aristo.logic.formula import describe
    >>> describe(parse_formula("~(p & ~p)"))
    'Neg(And(p, Neg(p)))'
    >>> describe(parse_formula("p -> q -> r"))
    'Imp(p, Imp(q, r))'
    >>> parse_formula("p & | q")
    Traceback (most recent call last):
    ...
    aristo.errors.FormulaSyntaxError: Expected a formula but found '|' at 4
    >>> parse_formula("(p")
    Traceback (most recent call last):
    ...
    aristo.errors.FormulaSyntaxError: Expected ')' but found the end at 2
    >>> parse_formula("p <-> q <-> r")
    Traceback (most recent call last):
    ...
    aristo.errors.FormulaSyntaxError: ...
    """
    tokens = tokenize(text)
    state = BasicState(tokens)
    try:
        return whole_formula(state)
    except ParsecError as error:
        # The failing token was read before the error was raised
        index = min(max(error.index - 1, 0), len(tokens) - 1)
        position = tokens[index].position
        raise FormulaSyntaxError(
            f"{error.message} at {position}", position) from error

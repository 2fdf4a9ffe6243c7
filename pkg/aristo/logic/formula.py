"""
Propositional formulas, where negation is implication into bottom.
"""
from dataclasses import dataclass
from typing import List, Union

__all__ = [
    'Formula', 'Atom', 'Top', 'Bottom', 'And', 'Or', 'Implies', 'negate',
    'biconditional', 'atoms', 'to_text', 'describe',
]


@dataclass(frozen=True)
class Atom:
    name: str


@dataclass(frozen=True)
class Top:
    pass


@dataclass(frozen=True)
class Bottom:
    pass


@dataclass(frozen=True)
class And:
    left: 'Formula'
    right: 'Formula'


@dataclass(frozen=True)
class Or:
    left: 'Formula'
    right: 'Formula'


@dataclass(frozen=True)
class Implies:
    left: 'Formula'
    right: 'Formula'


Formula = Union[Atom, Top, Bottom, And, Or, Implies]


def negate(formula: Formula) -> Formula:
    return Implies(formula, Bottom())


def biconditional(left: Formula, right: Formula) -> Formula:
    return And(Implies(left, right), Implies(right, left))


def _is_negation(formula: Formula) -> bool:
    return isinstance(formula, Implies) and isinstance(formula.right, Bottom)


def _is_biconditional(formula: Formula) -> bool:
    return (
        isinstance(formula, And)
        and isinstance(formula.left, Implies)
        and isinstance(formula.right, Implies)
        and formula.left.left == formula.right.right
        and formula.left.right == formula.right.left
    )


def atoms(formula: Formula) -> List[str]:
    """
    The atom names, in order of first appearance

    >>> atoms(Implies(Atom('q'), And(Atom('p'), Atom('q'))))
    ['q', 'p']
    """
    names: List[str] = []

    def visit(node: Formula):
        if isinstance(node, Atom):
            if node.name not in names:
                names.append(node.name)
        elif isinstance(node, (And, Or, Implies)):
            visit(node.left)
            visit(node.right)

    visit(formula)
    return names


PRECEDENCE_BICONDITIONAL = 0
PRECEDENCE_IMPLIES = 1
PRECEDENCE_OR = 2
PRECEDENCE_AND = 3
PRECEDENCE_NOT = 4
PRECEDENCE_ATOM = 5


def _precedence(formula: Formula) -> int:
    if _is_biconditional(formula):
        return PRECEDENCE_BICONDITIONAL
    if _is_negation(formula):
        return PRECEDENCE_NOT
    if isinstance(formula, Implies):
        return PRECEDENCE_IMPLIES
    if isinstance(formula, Or):
        return PRECEDENCE_OR
    if isinstance(formula, And):
        return PRECEDENCE_AND
    return PRECEDENCE_ATOM


def to_text(formula: Formula) -> str:
    """
    Print with as few parentheses as parsing needs

    >>> p, q, r = Atom('p'), Atom('q'), Atom('r')
    >>> to_text(negate(And(p, negate(p))))
    '~(p & ~p)'
    >>> to_text(Implies(p, Implies(q, r))), to_text(Implies(Implies(p, q), r))
    ('p -> q -> r', '(p -> q) -> r')
    >>> to_text(biconditional(negate(negate(negate(p))), negate(p)))
    '~~~p <-> ~p'
    >>> to_text(Or(Top(), And(Bottom(), Or(p, q))))
    'top | bot & (p | q)'
    """
    if isinstance(formula, Atom):
        return formula.name
    if isinstance(formula, Top):
        return 'top'
    if isinstance(formula, Bottom):
        return 'bot'

    precedence = _precedence(formula)

    def child(node: Formula, minimum: int) -> str:
        text = to_text(node)
        if _precedence(node) < minimum:
            return f"({text})"
        return text

    if precedence == PRECEDENCE_BICONDITIONAL:
        return (
            f"{child(formula.left.left, PRECEDENCE_IMPLIES)} <-> "
            f"{child(formula.left.right, PRECEDENCE_IMPLIES)}")
    if precedence == PRECEDENCE_NOT:
        return f"~{child(formula.left, PRECEDENCE_NOT)}"
    if precedence == PRECEDENCE_IMPLIES:
        return (
            f"{child(formula.left, PRECEDENCE_OR)} -> "
            f"{child(formula.right, PRECEDENCE_IMPLIES)}")
    if precedence == PRECEDENCE_OR:
        return (
            f"{child(formula.left, PRECEDENCE_OR)} | "
            f"{child(formula.right, PRECEDENCE_AND)}")
    return (
        f"{child(formula.left, PRECEDENCE_AND)} & "
        f"{child(formula.right, PRECEDENCE_NOT)}")


def describe(formula: Formula) -> str:
    """
    The tree, showing negations as `Neg`

    >>> describe(negate(And(Atom('p'), negate(Atom('p')))))
    'Neg(And(p, Neg(p)))'
    >>> describe(Implies(Atom('p'), Or(Top(), Bottom())))
    'Imp(p, Or(top, bot))'
    """
    if isinstance(formula, Atom):
        return formula.name
    if isinstance(formula, Top):
        return 'top'
    if isinstance(formula, Bottom):
        return 'bot'
    if _is_negation(formula):
        return f"Neg({describe(formula.left)})"
    name = {And: 'And', Or: 'Or', Implies: 'Imp'}[type(formula)]
    return f"{name}({describe(formula.left)}, {describe(formula.right)})"

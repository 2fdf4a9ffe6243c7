"""
The exception hierarchy for every module.

Every error can carry a `witness`, a tuple of the elements, opens, points or
sections that demonstrate the problem, so that reports can show them.
"""
from typing import Optional, Tuple, Any

__all__ = [
    'AristoError',
    'LatticeError', 'NotAPartialOrder', 'NotALattice', 'NotDistributive',
    'UnknownElement', 'InvalidBound',
    'SpaceError', 'MissingEmptyOrFull', 'NotClosedUnderUnion',
    'NotClosedUnderIntersection', 'OpenMentionsUnknownPoint',
    'NotAPreorder', 'UnknownPoint', 'NotAnOpen', 'NotClosed',
    'EmptySubset', 'NotAHomeomorphism', 'InvalidPointMap',
    'RegionError', 'MalformedRegion', 'PointNotInteriorToRegion',
    'EmptySampleRegion',
    'PiecewiseError', 'MalformedPiecewiseFn', 'NotPiecewiseLinear',
    'NotContinuousOnInterval', 'TargetOutOfRange',
    'PresheafError', 'MissingSectionSet', 'MissingRestriction',
    'IdentityViolated', 'CompositionViolated', 'RestrictionConflict',
    'UnknownSection',
    'NilpotentError', 'OrderMismatch', 'InvalidOrder',
    'LogicError', 'FormulaSyntaxError', 'UnassignedAtom', 'TooManyAtoms',
    'InputError', 'InputParseError', 'UnknownCommand',
]


class AristoError(Exception):
    """
    The root of all errors raised on purpose.

    >>> error = AristoError("Something is off", witness=('a', 'b'))
    >>> str(error), error.witness
    ('Something is off', ('a', 'b'))
    """
    def __init__(self, message: str,
                 witness: Optional[Tuple[Any, ...]] = None):
        super().__init__(message)
        self.message = message
        self.witness = witness


class LatticeError(AristoError):
    pass


class NotAPartialOrder(LatticeError):
    pass


class NotALattice(LatticeError):
    pass


class NotDistributive(LatticeError):
    pass


class UnknownElement(LatticeError):
    pass


class InvalidBound(LatticeError):
    pass


class SpaceError(AristoError):
    pass


class MissingEmptyOrFull(SpaceError):
    pass


class NotClosedUnderUnion(SpaceError):
    pass


class NotClosedUnderIntersection(SpaceError):
    pass


class OpenMentionsUnknownPoint(SpaceError):
    pass


class NotAPreorder(SpaceError):
    pass


class UnknownPoint(SpaceError):
    pass


class NotAnOpen(SpaceError):
    pass


class NotClosed(SpaceError):
    pass


class EmptySubset(SpaceError):
    pass


class NotAHomeomorphism(SpaceError):
    pass


class InvalidPointMap(SpaceError):
    pass


class RegionError(AristoError):
    pass


class MalformedRegion(RegionError):
    pass


class PointNotInteriorToRegion(RegionError):
    pass


class EmptySampleRegion(RegionError):
    pass


class PiecewiseError(AristoError):
    pass


class MalformedPiecewiseFn(PiecewiseError):
    pass


class NotPiecewiseLinear(PiecewiseError):
    pass


class NotContinuousOnInterval(PiecewiseError):
    pass


class TargetOutOfRange(PiecewiseError):
    pass


class PresheafError(AristoError):
    pass


class MissingSectionSet(PresheafError):
    pass


class MissingRestriction(PresheafError):
    pass


class IdentityViolated(PresheafError):
    pass


class CompositionViolated(PresheafError):
    pass


class RestrictionConflict(PresheafError):
    pass


class UnknownSection(PresheafError):
    pass


class NilpotentError(AristoError):
    pass


class OrderMismatch(NilpotentError):
    pass


class InvalidOrder(NilpotentError):
    pass


class LogicError(AristoError):
    pass


class FormulaSyntaxError(LogicError):
    """A formula could not be parsed; `position` is the 0-based offset"""
    def __init__(self, message: str, position: int):
        super().__init__(message, witness=(position,))
        self.position = position


class UnassignedAtom(LogicError):
    pass


class TooManyAtoms(LogicError):
    pass


class InputError(AristoError):
    pass


class InputParseError(InputError):
    """An input file (or inline value) could not be understood"""
    def __init__(self, message: str, file: Optional[str] = None,
                 position: Optional[str] = None):
        super().__init__(message, witness=(file, position))
        self.file = file
        self.position = position


class UnknownCommand(InputError):
    pass

# -*- coding: utf-8 -*-
"""
Exception hierarchy for the layered-defense solvers.

Every error carries the process exit code the command-line front end uses
when the error escapes a command.
"""


class LayeredDefenseError(Exception):
    """Base class for all solver errors"""
    exit_code = 1


# Input errors (exit 2)

class InputError(LayeredDefenseError):
    exit_code = 2


class CycleDetected(InputError):
    pass


class MultipleParents(InputError):
    pass


class UnreachableVertex(InputError):
    pass


class UnknownRoot(InputError):
    pass


class IndexOutOfRange(InputError):
    pass


class NotARootedSubtree(InputError):
    pass


class LengthMismatch(InputError):
    pass


class MultisetMismatch(InputError):
    pass


class NegativeWeight(InputError):
    pass


class InvalidRational(InputError):
    pass


class InvalidAffineMap(InputError):
    pass


class InvalidBudget(InputError):
    pass


class DocumentError(InputError):
    pass


class Unreachable(InputError):
    pass


# Size guards (exit 3)

class GuardError(LayeredDefenseError):
    exit_code = 3


class TooLarge(GuardError):
    pass


class BudgetCeilingExceeded(GuardError):
    pass


# Wrong tree class or model flavor (exit 4)

class ClassError(LayeredDefenseError):
    exit_code = 4


class WrongTreeClass(ClassError):
    pass


class NotUnitCost(ClassError):
    pass


class NotUnitPrize(ClassError):
    pass


# Transform preconditions (exit 5)

class TransformError(LayeredDefenseError):
    exit_code = 5


class NonIntegerCost(TransformError):
    pass


class NonIntegerPrize(TransformError):
    pass


class ZeroCost(TransformError):
    pass


class NotScaled(TransformError):
    pass


class NotARootedSubtreeOfSupertree(TransformError):
    pass

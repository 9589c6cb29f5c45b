#!/usr/bin/env python
# coding: utf-8


class FocalError(Exception):
    """
    Base class of every exception raised by `k3focal`.
    """
    pass


class InputError(FocalError, ValueError):
    """
    It is raised if an argument is malformed or out of the supported domain.

    Attributes:
        what(str):      name of the offending argument.
        value:          the value passed in.
        reason(str):    why it was rejected.
    """

    def __init__(self, what, value, reason):
        super(InputError, self).__init__(what, value, reason)
        self.what = what
        self.value = value
        self.reason = reason

    def __str__(self):
        s = [self.__class__.__name__,
             "argument: " + str(self.what),
             "value: " + repr(self.value),
             "reason: " + str(self.reason)]
        return "\n".join(s)

    def __repr__(self):
        return self.__str__()


class UnsupportedCaseError(InputError):
    """
    It is raised if an operation is only defined on part of a closed
    enumeration, e.g. a trace-form ratio asked for an exceptional algebra.
    """
    pass


class ResourceError(FocalError):
    """
    It is raised if a representation is larger than the dimension guard.

    Attributes:
        dim(int):   Weyl dimension of the requested representation.
        guard(int): the guard in effect.
    """

    def __init__(self, dim, guard):
        super(ResourceError, self).__init__(dim, guard)
        self.dim = dim
        self.guard = guard

    def __str__(self):
        return "\n".join([self.__class__.__name__,
                          "dimension: " + str(self.dim),
                          "guard: " + str(self.guard)])

    def __repr__(self):
        return self.__str__()


class InternalError(FocalError, AssertionError):
    """
    It is raised if a mathematical invariant that must always hold is found
    broken. It signals a bug, not bad input.
    """
    pass


class InvariantViolation(InternalError):
    """
    It is raised if two independent routes to the same quantity disagree.

    Attributes:
        name(str):   what was compared.
        expected:    value from the reference route.
        actual:      value from the checked route.
    """

    def __init__(self, name, expected, actual):
        super(InvariantViolation, self).__init__(name, expected, actual)
        self.name = name
        self.expected = expected
        self.actual = actual

    def __str__(self):
        return "\n".join([self.__class__.__name__,
                          str(self.name),
                          "expected: " + str(self.expected),
                          "actual: " + str(self.actual)])

    def __repr__(self):
        return self.__str__()


class ConfigurationError(FocalError):
    """
    It is raised if a torus embedding does not map lattices or roots the way
    a subgroup embedding must.
    """
    pass


UsageError = InputError

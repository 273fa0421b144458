#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Error Types

Every failure raised by the core modules derives from MotivicError so the
command-line layer can report it with one handler.
"""


class MotivicError(Exception):
    """Base class for all errors raised by motivic-ts."""

    module = "core"


class UnboundOpaque(MotivicError):
    """An Opaque generator was realized without a value binding."""

    module = "gring"

    def __init__(self, name: str, q: int, k: int):
        super().__init__(f"no value bound for Opaque(\"{name}\") at q={q}, k={k}")
        self.name = name
        self.q = q
        self.k = k


class IncompatibleOrder(MotivicError):
    """A twisted realization was requested at q with m not dividing q-1."""

    module = "gring"


class BudgetExceeded(MotivicError):
    """An enumeration would exceed the configured budget."""

    module = "arcspaces"

    def __init__(self, what: str, size: int, budget: int):
        super().__init__(f"{what} needs {size} evaluations, budget is {budget}")
        self.size = size
        self.budget = budget


class Unbounded(MotivicError):
    """A lattice computation was requested on an unbounded Gamma set."""

    module = "gammatools"


class NonLatticeValue(MotivicError):
    """An affine functional value is not in (1/m)Z."""

    module = "gammatools"


class FragmentError(MotivicError):
    """A convolution operand lies outside the supported finite fragment."""

    module = "convolution"


class StructureUnsupported(MotivicError):
    """The structured strategy or closed form cannot handle this input."""

    module = "arcspaces"


class PreconditionViolated(MotivicError):
    """An input does not satisfy the documented precondition."""

    module = "arcspaces"


class ParseError(MotivicError):
    """Malformed text input (class expression, polynomial, strata file, ...)."""

    module = "parser"

    def __init__(self, message: str, line: int = 0):
        if line:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class GcdMismatch(ParseError):
    """A stratum's m does not equal the gcd of its multiplicities."""

    module = "resolution"


class DuplicateIdSet(ParseError):
    """Two strata share the same component set."""

    module = "resolution"


class SeriesFormError(MotivicError):
    """A series is not in the single-factor normal form."""

    module = "series"


class UnsupportedRealization(MotivicError):
    """The requested realization is not defined on this class."""

    module = "gring"

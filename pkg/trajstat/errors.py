# -*- coding: utf-8 -*-

# Trajstat: thermodynamics of quantum trajectories
# Copyright (C) 2025 The Trajstat Authors
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

"""Exception hierarchy shared by the numerical core and the CLI.

Every error carries the process exit status the command line tool
reports when it is raised out of a command.
"""

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_NUMERICAL = 2
EXIT_IO = 3


class TrajstatError(Exception):
    """Base class for all errors raised by trajstat."""

    exit_status = EXIT_NUMERICAL


class ModelError(TrajstatError):
    """A model file or model object is not acceptable."""

    exit_status = EXIT_VALIDATION


class ParseError(ModelError):
    """A model file could not be read against the schema."""


class ValidationError(ModelError):
    """A model violates one of its physical invariants."""


class NumericalError(TrajstatError):
    """A numerical assumption required by a computation failed."""

    exit_status = EXIT_NUMERICAL


class DomainError(NumericalError, ValueError):
    """A parameter lies outside the admissible window."""


class SingularSolve(NumericalError):
    """A linear solve is too badly conditioned to be trusted."""

    def __init__(self, message: str, condition: float = float("inf")):
        super().__init__(message)
        self.condition = condition


class EigensolverFailure(NumericalError):
    """The dense eigensolver did not converge."""


class DegenerateDominant(NumericalError):
    """The dominant eigenvalue is not separated from the rest."""

    def __init__(self, message: str, gap: float = 0.0):
        super().__init__(message)
        self.gap = gap


class NonPositiveEigenvector(NumericalError):
    """A dominant eigenvector expected to be positive is not."""


class NonConvexInput(NumericalError):
    """Data handed to a convex conjugate is not convex."""

    def __init__(self, message: str, indices=()):
        super().__init__(message)
        self.indices = list(indices)


class TailMassExceeded(NumericalError):
    """The counting truncation leaves too much probability out."""

    def __init__(self, message: str, tail_mass: float, suggested_k_max: int):
        super().__init__(message)
        self.tail_mass = tail_mass
        self.suggested_k_max = suggested_k_max


class DarkState(NumericalError):
    """The conditional state never jumps again for this draw."""

    def __init__(self, message: str, survival_limit: float = 0.0):
        super().__init__(message)
        self.survival_limit = survival_limit


class InsufficientAcceptance(NumericalError):
    """Rejection sampling accepted too few trajectories."""

    def __init__(self, message: str, acceptance: float = 0.0):
        super().__init__(message)
        self.acceptance = acceptance


class QuadratureOverflow(NumericalError):
    """A quadrature grid would exceed the configured size cap."""

"""Exception hierarchy.

Every error carries an ``exit_code`` and a human readable ``detail``; the CLI maps
them onto process exit codes the way an API maps them onto status codes.
"""

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INPUT = 2


class HexlapError(Exception):
    """Base class for all hexlap errors."""

    exit_code: int = EXIT_FAILURE

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


# Input errors

class InputError(HexlapError):
    exit_code = EXIT_INPUT


class GraphInputError(InputError):
    """Invalid vertex count or edge list."""


class VertexIndexError(GraphInputError):
    pass


class SelfLoopError(GraphInputError):
    pass


class DuplicateEdgeError(GraphInputError):
    pass


class EdgeListFormatError(GraphInputError):
    pass


class GeneratorError(InputError):
    pass


class TheoryPreconditionError(InputError):
    """Graph violates a precondition of the hexagonal theory (no edges, disconnected, ...)."""


class VertexBudgetError(InputError):
    def __init__(self, predicted_vertices: int, budget: int):
        super().__init__(
            f"H^k_n would have {predicted_vertices} vertices, above the budget of {budget} "
            "(set HEXLAP_VERTEX_BUDGET to raise it)"
        )
        self.predicted_vertices = predicted_vertices
        self.budget = budget


class SpectrumInputError(InputError):
    """Spectrum is inconsistent with its metadata."""


class ExponentIntegralityError(InputError):
    """A closed-form exponent did not evaluate to a non-negative integer."""


# Numerical errors

class NumericalError(HexlapError):
    exit_code = EXIT_FAILURE


class JacobiConvergenceError(NumericalError):
    pass


class RootBracketingError(NumericalError):
    pass


class TauOverflowError(NumericalError):
    """An exact spanning-tree count could not be rendered."""

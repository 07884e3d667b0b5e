"""Exception types and shared limits."""

DEFAULT_NODE_BUDGET = 10**8


class InvalidInputError(ValueError):
    """Input violates a documented precondition or invariant."""


class GraphFormatError(InvalidInputError):
    """Malformed graph file."""


class CnfFormatError(InvalidInputError):
    """Malformed DIMACS CNF file."""


class BudgetExceededError(RuntimeError):
    """An exact search exceeded its configured node budget."""

    def __init__(self, operation: str, budget: int):
        super().__init__(f"{operation}: node budget of {budget} exceeded")
        self.operation = operation
        self.budget = budget

"""Exception types shared across the package."""

__all__ = ["BudgetExceededError", "IntegrityError"]


class BudgetExceededError(RuntimeError):
    """A search exceeded its configured node budget."""

    def __init__(self, budget: int):
        self.budget = budget
        super().__init__(f"search exceeded the node budget of {budget}")


class IntegrityError(RuntimeError):
    """An internal consistency check failed (indicates a bug, not bad input)."""

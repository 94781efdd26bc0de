"""Exceptions shared across modules."""


class BudgetExceededError(Exception):
    """An exhaustive enumeration would exceed its configured budget.

    Raised instead of returning a partial answer; the CLI maps this to
    exit code 3.
    """


class ToleranceAmbiguityError(Exception):
    """A pair distance fell in the gray zone around 1 (outside the unit
    tolerance band but inside ten times it), so classifying it either way
    would be a silent guess."""

"""Shared exception types."""

from __future__ import annotations


class InputError(ValueError):
    """Malformed user input: bad vertex index, bad edge, unparseable file."""


class BudgetExceededError(RuntimeError):
    """The solver hit its search-node budget before finishing.

    The search never returns a possibly-wrong answer; it raises this instead.
    """

    def __init__(self, budget: int, nodes: int):
        super().__init__(f"search budget exceeded: {nodes} nodes > {budget}")
        self.budget = budget
        self.nodes = nodes

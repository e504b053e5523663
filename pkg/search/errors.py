"""
Exceptions raised by witness search.
"""

from typing import Any, Optional


class SearchError(Exception):
    """Base class for search failures."""


class GuardViolation(SearchError):
    """The requested search would blow past the enumeration guards."""


class BudgetExceeded(SearchError):
    """
    The candidate budget ran out before the search space was exhausted.

    ``partial`` carries the result collected up to that point.
    """

    def __init__(self, message: str, partial: Optional[Any] = None):
        super().__init__(message)
        self.partial = partial

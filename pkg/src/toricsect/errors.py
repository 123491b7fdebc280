"""Exception hierarchy.

Every domain error derives from :class:`ToricError` (itself a ``ValueError``)
so callers can catch one type; the CLI maps these to exit code 1.
"""


class ToricError(ValueError):
    pass


class SlopeParseError(ToricError):
    pass


class NonPrimitive(ToricError):
    pass


class AdjacencyViolation(ToricError):
    """Consecutive slopes (1-based ``position`` and its successor) are not Farey neighbours."""

    def __init__(self, position: int):
        self.position = position
        super().__init__(f"adjacency violation at position {position}")


class TooShort(ToricError):
    pass


class DegenerateDiagram(ToricError):
    pass


class IndexOutOfRange(ToricError):
    pass


class NoReduction(ToricError):
    pass


class NonPositiveDegree(ToricError):
    pass


class DegenerateDegree(ToricError):
    pass


class NonGenericPlacement(ToricError):
    pass


class DivisibilityViolation(ToricError):
    pass

"""Exception types shared across the package."""


class VertexCapExceeded(ValueError):
    """Vertex count above the supported cap (graph6 short form stops at 62)."""


class GraphFormatError(ValueError):
    """Malformed graph6 data, or a declared bipartition the edges violate."""


class ParameterRangeError(ValueError):
    """Formula or construction parameters outside their stated range."""


class SearchBudgetExceeded(RuntimeError):
    """An exact search hit its time budget before proving optimality."""


class EnumerationCapExceeded(ValueError):
    """An oracle run was requested above the configured edge-bit cap."""

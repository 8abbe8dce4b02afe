"""Exception types shared across the package."""


class HyperchromError(Exception):
    pass


class ValidationError(HyperchromError, ValueError):
    """Input does not describe a valid linear loopless hypergraph."""


class EmptyInput(ValidationError):
    pass


class DuplicateLabel(ValidationError):
    pass


class UnknownLabel(ValidationError):
    def __init__(self, label, edge_index=None):
        self.label = label
        self.edge_index = edge_index
        where = f" in edge {edge_index}" if edge_index is not None else ""
        super().__init__(f"unknown vertex label {label!r}{where}")


class SizeOneEdge(ValidationError):
    def __init__(self, edge_index):
        self.edge_index = edge_index
        super().__init__(f"edge {edge_index} has fewer than 2 vertices")


class DuplicateEdge(ValidationError):
    def __init__(self, first, second):
        self.pair = (first, second)
        super().__init__(f"edges {first} and {second} are the same vertex set")


class NonLinearPair(ValidationError):
    def __init__(self, first, second, shared):
        self.pair = (first, second)
        self.shared = shared
        super().__init__(
            f"edges {first} and {second} share {len(shared)} vertices {sorted(shared)!r}"
        )


class IsolatedVertex(ValidationError):
    def __init__(self, label):
        self.label = label
        super().__init__(f"vertex {label!r} lies in no edge")


class MissingEdgeAssignment(HyperchromError, ValueError):
    pass


class NotApplicable(HyperchromError):
    """The requested construction is undefined for this instance/case."""


class NonMinimalColoring(HyperchromError):
    """A consequence of coloring minimality failed, so the coloring is not minimal."""


class AntirankDegenerate(HyperchromError):
    pass


class VertexCapExceeded(HyperchromError):
    pass


class GroupOrderExceeded(HyperchromError):
    pass


class NonIntegerAverage(HyperchromError):
    """Burnside average is not an integer: the element list is not a group."""


class InfeasibleConfig(HyperchromError, ValueError):
    pass


class TooLarge(HyperchromError):
    """Instance exceeds the size an exhaustive oracle is allowed to handle."""

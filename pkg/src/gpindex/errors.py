"""Exception hierarchy. Every failure the CLI reports maps onto one of these."""


class GPIndexError(Exception):
    """Base class for all errors raised by this package."""


class GraphError(GPIndexError, ValueError):
    def __init__(self, message, edge_index=None):
        super().__init__(message)
        self.edge_index = edge_index


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class VertexRangeError(GraphError, IndexError):
    pass


class EmptyGraphError(GraphError):
    pass


class DisconnectedGraphError(GraphError):
    def __init__(self, message, representatives=()):
        super().__init__(message)
        self.representatives = tuple(representatives)


class ParseError(GPIndexError, ValueError):
    def __init__(self, message, line=None, path=None):
        self.line = line
        self.path = path
        where = ""
        if path is not None:
            where += f"{path}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)


class PartitionError(GPIndexError, ValueError):
    """Edge or vertex partition does not cover its universe exactly."""


class NotCoarserError(PartitionError):
    def __init__(self, message, split_class=()):
        super().__init__(message)
        self.split_class = tuple(split_class)


class SearchLimitExceeded(GPIndexError, RuntimeError):
    def __init__(self, node_limit):
        super().__init__(f"automorphism search exceeded node limit {node_limit}")
        self.node_limit = node_limit


class TubuleneSpecError(GPIndexError, ValueError):
    pass

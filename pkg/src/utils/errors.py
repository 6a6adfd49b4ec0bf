# error hierarchy shared by every package
from typing import Optional


class QaoaMaxcutError(ValueError):
    """Base class of every error this project raises on bad input."""


class ConfigError(QaoaMaxcutError):
    """Invalid run or optimizer configuration, or a simulator limit exceeded."""


class ArgumentError(QaoaMaxcutError):
    """An operation received an argument outside its domain."""


class SizeError(QaoaMaxcutError):
    """An exhaustive enumeration was asked for more than its guard allows."""


class GraphError(QaoaMaxcutError):
    """A Max-Cut instance violates the graph invariants."""


class ResultFileError(QaoaMaxcutError):
    """A structured result document could not be read back."""


class GraphFileError(QaoaMaxcutError):
    """
    Edge-list parse failure.

    line_no is 1-based; 0 means the failure is not tied to a line
    (e.g. the file is missing or has no header).
    """

    def __init__(self, path: str, line_no: int, reason: str) -> None:
        self.path = path
        self.line_no = line_no
        self.reason = reason
        super().__init__(f"{path}:{line_no}: {reason}")


class GraphFileMissingError(GraphFileError):
    def __init__(self, path: str, reason: Optional[str] = None) -> None:
        super().__init__(path, 0, reason or "graph file not found")


class MalformedLineError(GraphFileError):
    pass


class VertexRangeError(GraphFileError):
    pass


class SelfLoopError(GraphFileError):
    pass


class DuplicateEdgeError(GraphFileError):
    pass

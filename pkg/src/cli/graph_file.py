# edge-list text format
#
#   # comment
#   n 4
#   0 1
#   1 2
#
# The first non-comment line declares the vertex count; each following
# non-empty line is one edge "<u> <v>". Everything after '#' is ignored.
import os
from typing import List, Optional, Set, Tuple

from core.models import Graph
from utils.errors import (
    DuplicateEdgeError,
    GraphFileError,
    GraphFileMissingError,
    MalformedLineError,
    SelfLoopError,
    VertexRangeError,
)
from utils.logger import get_logger

_logger = get_logger(__name__)


def _to_int(token: str) -> Optional[int]:
    try:
        return int(token)
    except ValueError:
        return None


def parse_graph_text(text: str, path: str = "<string>") -> Graph:
    n_vertices: Optional[int] = None
    edges: List[Tuple[int, int]] = []
    seen: Set[frozenset] = set()

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()

        if n_vertices is None:
            if len(tokens) != 2 or tokens[0] != "n":
                raise MalformedLineError(
                    path, line_no, f"expected 'n <vertices>', got {line!r}"
                )
            n_vertices = _to_int(tokens[1])
            if n_vertices is None or n_vertices < 1:
                raise MalformedLineError(
                    path, line_no, f"vertex count must be a positive integer, got {tokens[1]!r}"
                )
            continue

        if len(tokens) != 2:
            raise MalformedLineError(path, line_no, f"expected '<u> <v>', got {line!r}")
        u, v = _to_int(tokens[0]), _to_int(tokens[1])
        if u is None or v is None:
            raise MalformedLineError(path, line_no, f"non-integer vertex in {line!r}")
        for vertex in (u, v):
            if not 0 <= vertex < n_vertices:
                raise VertexRangeError(
                    path, line_no, f"vertex {vertex} outside 0..{n_vertices - 1}"
                )
        if u == v:
            raise SelfLoopError(path, line_no, f"self-loop on vertex {u}")
        key = frozenset((u, v))
        if key in seen:
            raise DuplicateEdgeError(path, line_no, f"duplicate edge {u} {v}")
        seen.add(key)
        edges.append((u, v))

    if n_vertices is None:
        raise MalformedLineError(path, 0, "missing 'n <vertices>' header")
    return Graph(n_vertices, tuple(edges))


def parse_graph_file(path: str) -> Graph:
    if not os.path.isfile(path):
        raise GraphFileMissingError(path)
    try:
        with open(path, "r", encoding="utf-8") as f:
            text = f.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise GraphFileError(path, 0, f"cannot read graph file: {exc}") from exc
    graph = parse_graph_text(text, path)
    _logger.debug(f"Parsed {path}: {graph.n_vertices} vertices, {graph.n_edges} edges.")
    return graph


def format_graph(graph: Graph) -> str:
    lines = [f"n {graph.n_vertices}", *(f"{u} {v}" for u, v in graph.edges)]
    return "\n".join(lines) + "\n"


def write_graph_file(graph: Graph, path: str) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(format_graph(graph))

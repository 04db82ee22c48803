"""Plain-text graph files.

First line is ``digraph <n>`` or ``tournament <n>``; every other line
is one edge ``u v``. Writers emit edges in ascending (u, v) order with
LF newlines so identical graphs serialize to identical bytes, and
parsing a written file reproduces the original graph, its type
included.
"""

from .graphs import Digraph, Tournament

__all__ = ["GraphFileError", "format_graph", "parse_graph", "write_graph", "read_graph"]


class GraphFileError(ValueError):
    """Malformed graph file text."""


def format_graph(graph: Digraph) -> str:
    kind = "tournament" if isinstance(graph, Tournament) else "digraph"
    lines = ["%s %d" % (kind, graph.n)]
    lines.extend("%d %d" % edge for edge in graph.edges())
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Digraph:
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise GraphFileError("empty graph file")
    header = lines[0].split()
    if len(header) != 2 or header[0] not in ("digraph", "tournament"):
        raise GraphFileError("bad header %r" % lines[0])
    try:
        n = int(header[1])
    except ValueError:
        raise GraphFileError("bad vertex count %r" % header[1]) from None
    edges = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise GraphFileError("bad edge line %r" % line)
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphFileError("bad edge line %r" % line) from None
    cls = Tournament if header[0] == "tournament" else Digraph
    return cls.from_edges(n, edges)


def write_graph(graph: Digraph, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_graph(graph))


def read_graph(path) -> Digraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())

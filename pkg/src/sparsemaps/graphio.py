"""Plain-text graph files.

Format::

    # comment lines start with '#'; blank lines are skipped
    n m
    u v        (m lines, 0-indexed; u == v is a loop)
"""

from __future__ import annotations

import sys
from pathlib import Path
from typing import TextIO

from .errors import SparsityError
from .multigraph import MultiGraph


class GraphFileError(SparsityError):
    def __init__(self, message: str, lineno: int | None = None, source: str = "<input>"):
        where = f"{source}:{lineno}: " if lineno is not None else f"{source}: "
        super().__init__(where + message)
        self.lineno = lineno


def _ints(line: str, lineno: int, source: str, expected: int) -> list[int]:
    fields = line.split()
    if len(fields) != expected:
        raise GraphFileError(f"expected {expected} integers, got {line.strip()!r}", lineno, source)
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise GraphFileError(f"not an integer in {line.strip()!r}", lineno, source) from None


def parse_graph(text: str, source: str = "<input>") -> MultiGraph:
    header = None
    g = None
    declared = 0
    last = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        last = lineno
        if header is None:
            n, declared = _ints(line, lineno, source, 2)
            if n < 0 or declared < 0:
                raise GraphFileError("n and m must be nonnegative", lineno, source)
            header = lineno
            g = MultiGraph(n)
            continue
        u, v = _ints(line, lineno, source, 2)
        if g.m == declared:
            raise GraphFileError(f"more edge lines than the declared m={declared}", lineno, source)
        if not (0 <= u < g.n and 0 <= v < g.n):
            raise GraphFileError(f"endpoint out of range [0, {g.n})", lineno, source)
        g.add_edge(u, v)
    if g is None:
        raise GraphFileError("missing 'n m' header line", None, source)
    if g.m != declared:
        raise GraphFileError(f"declared m={declared} but found {g.m} edge lines", last, source)
    return g


def read_graph(path: str | Path, stdin: TextIO | None = None) -> MultiGraph:
    """Read a graph from ``path``; ``"-"`` reads standard input."""
    if str(path) == "-":
        return parse_graph((stdin or sys.stdin).read(), "<stdin>")
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise GraphFileError(f"cannot read file: {exc.strerror}", None, str(path)) from None
    return parse_graph(text, str(path))


def format_graph(g: MultiGraph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for _, u, v in g.edges)
    return "\n".join(lines) + "\n"

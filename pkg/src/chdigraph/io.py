"""Edge-list text format and DOT export.

Edge-list layout: a header line ``"n m"`` followed by ``m`` lines
``"tail head"`` (0-based, single space, LF endings). Lines starting with
``#`` are comments and are skipped by the parser.
"""

from __future__ import annotations

from pathlib import Path

from .digraph import Digraph, DigraphError


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def to_edge_list(g: Digraph) -> str:
    lines = [f"{g.n} {g.num_arcs}"]
    lines.extend(f"{u} {v}" for u, v in g.arcs())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str, oriented: bool = False) -> Digraph:
    header = None
    g = None
    count = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected two integers, got {line!r}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer token in {line!r}", lineno) from None
        if header is None:
            header = (a, b)
            try:
                g = Digraph(a, oriented=oriented)
            except DigraphError as exc:
                raise ParseError(str(exc), lineno) from None
            continue
        try:
            g.add_arc(a, b)
        except DigraphError as exc:
            raise ParseError(str(exc), lineno) from None
        count += 1
    if header is None or g is None:
        raise ParseError("missing 'n m' header")
    if count != header[1]:
        raise ParseError(f"header declares {header[1]} arcs, found {count}")
    return g


def read_edge_list(path: str | Path, oriented: bool = False) -> Digraph:
    return parse_edge_list(Path(path).read_text(), oriented=oriented)


def to_dot(g: Digraph, name: str = "G") -> str:
    lines = [f"digraph {name} {{"]
    lines.extend(f"  {v};" for v in range(g.n))
    lines.extend(f"  {u} -> {v};" for u, v in g.arcs())
    lines.append("}")
    return "\n".join(lines) + "\n"

"""Graph file parsing (edge-list and DIMACS) and writing."""

from __future__ import annotations

from .errors import ParseError
from .graph import Graph, build_graph
from .jsonutil import write_atomic


def parse_graph_text(text: str) -> Graph:
    """Parse edge-list ('n m' header, 0-indexed) or DIMACS ('p edge', 1-indexed).

    Edge-list grammar: optional '#' comment lines, one 'n m' header line,
    then exactly m lines 'u v'. DIMACS: 'c' comments, one 'p edge n m' line,
    then 'e u v' lines. Errors carry 1-based line numbers.
    """
    lines = text.splitlines()
    numbered = [
        (i + 1, line.strip())
        for i, line in enumerate(lines)
        if line.strip() and not line.strip().startswith("#")
    ]
    if not numbered:
        raise ParseError(1, "no data lines")
    first_no, first = numbered[0]
    if first.startswith("c ") or first == "c" or first.startswith("p "):
        return _parse_dimacs(numbered)
    return _parse_edge_list(numbered)


def _parse_edge_list(numbered) -> Graph:
    line_no, header = numbered[0]
    parts = header.split()
    if len(parts) != 2:
        raise ParseError(line_no, f"expected header 'n m', got {header!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(line_no, f"non-integer header fields in {header!r}") from None
    body = numbered[1:]
    if len(body) != m:
        raise ParseError(
            body[-1][0] if body else line_no,
            f"header promises {m} edges but found {len(body)} data lines",
        )
    edges = []
    for edge_no, line in body:
        fields = line.split()
        if len(fields) != 2:
            raise ParseError(edge_no, f"expected 'u v', got {line!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(edge_no, f"non-integer vertex in {line!r}") from None
        if not (0 <= u < n) or not (0 <= v < n):
            raise ParseError(edge_no, f"vertex out of range in {line!r} (n = {n})")
        if u == v:
            raise ParseError(edge_no, f"self-loop in {line!r}")
        edges.append((u, v))
    return build_graph(n, edges)


def _parse_dimacs(numbered) -> Graph:
    n = None
    edges = []
    for line_no, line in numbered:
        fields = line.split()
        tag = fields[0]
        if tag == "c":
            continue
        if tag == "p":
            if n is not None:
                raise ParseError(line_no, "duplicate problem line")
            if len(fields) != 4 or fields[1] not in ("edge", "col"):
                raise ParseError(line_no, f"expected 'p edge n m', got {line!r}")
            try:
                n = int(fields[2])
            except ValueError:
                raise ParseError(line_no, f"non-integer vertex count in {line!r}") from None
            continue
        if tag == "e":
            if n is None:
                raise ParseError(line_no, "edge before problem line")
            if len(fields) != 3:
                raise ParseError(line_no, f"expected 'e u v', got {line!r}")
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise ParseError(line_no, f"non-integer vertex in {line!r}") from None
            if not (1 <= u <= n) or not (1 <= v <= n):
                raise ParseError(line_no, f"vertex out of range in {line!r} (1..{n})")
            if u == v:
                raise ParseError(line_no, f"self-loop in {line!r}")
            edges.append((u - 1, v - 1))
            continue
        raise ParseError(line_no, f"unknown DIMACS record {tag!r}")
    if n is None:
        raise ParseError(numbered[0][0], "missing problem line")
    return build_graph(n, edges)


def parse_graph_file(path: str) -> Graph:
    with open(path) as fh:
        return parse_graph_text(fh.read())


def edge_list_text(g: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        for row in comment.splitlines():
            lines.append(f"# {row}")
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def write_edge_list(g: Graph, path: str, comment: str | None = None):
    write_atomic(path, edge_list_text(g, comment))

"""Text formats: edge lists, 0/1 adjacency matrices and short-form graph6."""
from __future__ import annotations

import enum
import re

from .errors import ParseError
from .graph import Graph, from_edge_list


class InputFormat(enum.Enum):
    EDGELIST = "edgelist"
    ADJMATRIX = "adjmatrix"
    GRAPH6 = "graph6"


GRAPH6_HEADER = ">>graph6<<"


def _content_lines(text: str) -> list[str]:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    return lines


def parse_edge_list(text: str) -> Graph:
    """Vertex count on the first line, then one ``u v`` pair per line.

    ``#`` starts a comment; blank lines are skipped.
    """
    lines = _content_lines(text)
    if not lines:
        raise ParseError("edge list is empty; expected a vertex count")
    try:
        n = int(lines[0])
    except ValueError:
        raise ParseError(f"first line {lines[0]!r} is not a vertex count") from None
    if n < 0:
        raise ParseError(f"negative vertex count {n}")
    edges = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {line!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError(f"non-integer token in {line!r}") from None
    return from_edge_list(n, edges)


def parse_adjacency_matrix(text: str) -> Graph:
    """``n`` rows of ``n`` characters ``0``/``1``; symmetric with a zero diagonal."""
    rows = [line.replace(" ", "") for line in _content_lines(text)]
    n = len(rows)
    for i, row in enumerate(rows):
        if len(row) != n or set(row) - {"0", "1"}:
            raise ParseError(f"row {i} must be {n} characters of 0/1, got {row!r}")
        if row[i] != "0":
            raise ParseError(f"non-zero diagonal entry in row {i}")
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                raise ParseError(f"matrix is not symmetric at ({i}, {j})")
            if rows[i][j] == "1":
                edges.append((i, j))
    return from_edge_list(n, edges)


def _graph6_length(n: int) -> int:
    return 1 + (n * (n - 1) // 2 + 5) // 6


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise ParseError("empty graph6 string")
    data = s.encode("ascii", errors="replace")
    for b in data:
        if not 63 <= b <= 126:
            raise ParseError(f"byte {b!r} outside the graph6 range 63..126")
    if data[0] == 126:
        raise ParseError("long-form graph6 (n > 62) is not supported")
    n = data[0] - 63
    if len(data) != _graph6_length(n):
        raise ParseError(f"graph6 for n={n} needs {_graph6_length(n)} bytes, got {len(data)}")
    bits = []
    for b in data[1:]:
        x = b - 63
        bits.extend((x >> k) & 1 for k in range(5, -1, -1))
    npairs = n * (n - 1) // 2
    if any(bits[npairs:]):
        raise ParseError("graph6 padding bits must be zero")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return from_edge_list(n, edges)


def to_graph6(g: Graph) -> str:
    if g.n > 62:
        raise ParseError("graph6 short form supports at most 62 vertices")
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, g.n) for i in range(j)]
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(63 + g.n)]
    for k in range(0, len(bits), 6):
        x = 0
        for b in bits[k:k + 6]:
            x = (x << 1) | b
        out.append(chr(63 + x))
    return "".join(out)


def to_edge_list_text(g: Graph) -> str:
    return "".join([f"{g.n}\n"] + [f"{u} {v}\n" for u, v in g.edges()])


def to_adjacency_matrix_text(g: Graph) -> str:
    return "".join(
        "".join("1" if g.has_edge(i, j) else "0" for j in range(g.n)) + "\n" for i in range(g.n)
    )


def detect_format(text: str) -> InputFormat:
    """Guess the format from the first content line.

    A lone integer without leading zeros means an edge list, a run of 0/1 characters means an
    adjacency matrix, anything else is taken as graph6.
    """
    lines = _content_lines(text)
    if not lines:
        raise ParseError("no graph data found")
    first = lines[0]
    # an adjacency row always starts with its zero diagonal entry, so "011" is a row, not 11
    if re.fullmatch(r"0|[1-9][0-9]*", first):
        return InputFormat.EDGELIST
    if set(first.replace(" ", "")) <= {"0", "1"}:
        return InputFormat.ADJMATRIX
    return InputFormat.GRAPH6


def parse_graph(text: str, fmt: InputFormat | str = "auto") -> Graph:
    if isinstance(fmt, str):
        fmt = detect_format(text) if fmt == "auto" else InputFormat(fmt)
    if fmt is InputFormat.EDGELIST:
        return parse_edge_list(text)
    if fmt is InputFormat.ADJMATRIX:
        return parse_adjacency_matrix(text)
    return parse_graph6(text)

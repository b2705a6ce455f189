"""Graph serialization: whitespace-tolerant edge lists and graph6 strings.

Edge-list files start with a line "n m" followed by m lines "u v" with
0-based vertex ids; blank lines and '#' comments are ignored.  graph6
follows the de-facto bit packing: 6-bit groups of the column-major upper
triangle, each group offset by 63.
"""

from __future__ import annotations

from .errors import FormatError
from .graph import Graph

GRAPH6_HEADER = ">>graph6<<"


def parse_edge_list(text: str) -> Graph:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            rows.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise FormatError(f"line {lineno}: expected two integers, got {raw!r}")
    if not rows:
        raise FormatError("empty edge-list input")
    n, m = rows[0]
    if n < 0 or m < 0:
        raise FormatError(f"header must be non-negative, got n={n} m={m}")
    edges = rows[1:]
    if len(edges) != m:
        raise FormatError(f"header declares {m} edges but {len(edges)} lines follow")
    try:
        return Graph(n, edges)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def write_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edge_list())
    return "\n".join(lines) + "\n"


def _encode_order(n: int) -> bytes:
    if n < 0:
        raise FormatError("graph6 order must be non-negative")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    raise FormatError(f"graph6 order {n} not supported")


def _decode_order(data: bytes) -> tuple[int, int]:
    """Return (n, bytes consumed)."""
    if not data:
        raise FormatError("empty graph6 string")
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise FormatError("graph6 orders above 258047 not supported")
        if len(data) < 4:
            raise FormatError("truncated graph6 order")
        vals = [b - 63 for b in data[1:4]]
        if any(v < 0 or v > 63 for v in vals):
            raise FormatError("invalid graph6 order bytes")
        return (vals[0] << 12) | (vals[1] << 6) | vals[2], 4
    n = data[0] - 63
    if not (0 <= n <= 62):
        raise FormatError(f"invalid graph6 leading byte {data[0]}")
    return n, 1


def write_graph6(g: Graph) -> str:
    n = g.n
    out = bytearray(_encode_order(n))
    bits = 0
    nbits = 0
    for j in range(1, n):
        for i in range(j):
            bits = (bits << 1) | (1 if g.has_edge(i, j) else 0)
            nbits += 1
            if nbits == 6:
                out.append(bits + 63)
                bits = 0
                nbits = 0
    if nbits:
        out.append((bits << (6 - nbits)) + 63)
    return out.decode("ascii")


def parse_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    data = s.encode("ascii", errors="replace")
    n, used = _decode_order(data)
    body = data[used:]
    need = n * (n - 1) // 2
    if len(body) * 6 < need:
        raise FormatError(f"graph6 body too short for n={n}")
    bits = []
    for b in body:
        v = b - 63
        if v < 0 or v > 63:
            raise FormatError(f"invalid graph6 body byte {b}")
        bits.extend((v >> shift) & 1 for shift in range(5, -1, -1))
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    if any(bits[need:]):
        raise FormatError("nonzero padding bits in graph6 body")
    return Graph(n, edges)


def parse_auto(text: str) -> Graph:
    """Parse either format, deciding by the first meaningful byte.

    Edge lists open with a digit or a comment; anything else is graph6.
    """
    stripped = text.lstrip()
    if not stripped:
        raise FormatError("empty graph input")
    first = stripped[0]
    if first.isdigit() or first == "#":
        return parse_edge_list(text)
    return parse_graph6(stripped.splitlines()[0])

"""graph6 reader/writer, short form only (n <= 62).

A graph6 line is one size byte ``chr(n + 63)`` followed by the upper triangle of
the adjacency matrix, column by column (``x(0,1), x(0,2), x(1,2), x(0,3), ...``),
packed six bits per printable byte ``chr(bits + 63)`` and zero-padded.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

from .errors import Graph6Error
from .graph import Graph

HEADER = ">>graph6<<"
MAX_N = 62


def _pairs(n: int) -> Iterator[tuple[int, int]]:
    for j in range(1, n):
        for i in range(j):
            yield i, j


def parse_graph6(line: str | bytes) -> Graph:
    if isinstance(line, bytes):
        line = line.decode("ascii", errors="replace")
    text = line.rstrip("\r\n")
    start = 0
    if text.startswith(HEADER):
        start = len(HEADER)
    body = text[start:]
    if not body:
        raise Graph6Error("empty graph6 string", start)
    for k, ch in enumerate(body):
        c = ord(ch)
        if c < 63 or c > 126:
            raise Graph6Error(f"character {ch!r} out of range 63..126", start + k)
    n = ord(body[0]) - 63
    if n == 63:
        raise Graph6Error(f"graphs with n > {MAX_N} are not supported", start)
    nbits = n * (n - 1) // 2
    expect = 1 + (nbits + 5) // 6
    if len(body) != expect:
        raise Graph6Error(
            f"bad length: n={n} needs {expect} bytes, got {len(body)}",
            start + min(len(body), expect),
        )
    adj: list[set[int]] = [set() for _ in range(n)]
    data = body[1:]
    for k, (i, j) in enumerate(_pairs(n)):
        byte = ord(data[k // 6]) - 63
        if byte >> (5 - k % 6) & 1:
            adj[i].add(j)
            adj[j].add(i)
    return Graph(n, adj)


def encode_graph6(g: Graph) -> str:
    if g.n > MAX_N:
        raise Graph6Error(f"cannot encode n={g.n}: only n <= {MAX_N} is supported")
    out = [chr(g.n + 63)]
    acc = 0
    count = 0
    for i, j in _pairs(g.n):
        acc = (acc << 1) | (1 if j in g.adj[i] else 0)
        count += 1
        if count == 6:
            out.append(chr(acc + 63))
            acc = count = 0
    if count:
        out.append(chr((acc << (6 - count)) + 63))
    return "".join(out)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, Graph]]:
    """Yield ``(line_number, graph)`` for each non-blank line; errors carry the line number."""
    for lineno, line in enumerate(lines, start=1):
        s = line.strip()
        if not s:
            continue
        try:
            yield lineno, parse_graph6(s)
        except Graph6Error as exc:
            raise Graph6Error(f"line {lineno}: {exc}") from exc

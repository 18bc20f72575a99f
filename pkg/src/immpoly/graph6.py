"""graph6 encoding (McKay's format) and graph-file streaming."""

from __future__ import annotations

from typing import IO, Iterator, List, Tuple, Union
import os

from .graphs import Graph

__all__ = ["Graph6Error", "parse_graph6", "emit_graph6", "read_graph6_lines", "iter_graph6_file"]

_HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    pass


def _decode_n(data: bytes) -> Tuple[int, int]:
    if not data:
        raise Graph6Error("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6Error("truncated 8-byte size header")
        size, width = data[2:8], 8
    else:
        if len(data) < 4:
            raise Graph6Error("truncated 4-byte size header")
        size, width = data[1:4], 4
    n = 0
    for c in size:
        n = (n << 6) | (c - 63)
    return n, width


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def parse_graph6(text: Union[str, bytes]) -> Graph:
    """Decode one graph6 line.

    Raises Graph6Error on an empty or malformed header, characters outside
    63..126, a body of the wrong length, or nonzero padding bits.
    """
    if isinstance(text, str):
        text = text.strip()
        if text.startswith(_HEADER):
            text = text[len(_HEADER):]
        try:
            data = text.encode("ascii")
        except UnicodeEncodeError:
            raise Graph6Error("non-ASCII character in graph6 string") from None
    else:
        data = text.strip()
    if any(not 63 <= c <= 126 for c in data):
        raise Graph6Error("character outside the graph6 range 63..126")
    n, offset = _decode_n(data)
    body = data[offset:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise Graph6Error(f"body length {len(body)} does not match n={n}")
    bits: List[int] = []
    for c in body:
        v = c - 63
        bits.extend((v >> s) & 1 for s in range(5, -1, -1))
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, frozenset(edges))


def emit_graph6(G: Graph) -> str:
    n = G.n
    bits = [1 if G.has_edge(i, j) else 0 for j in range(1, n) for i in range(j)]
    bits.extend([0] * (-len(bits) % 6))
    chars = [
        chr(63 + sum(b << (5 - s) for s, b in enumerate(bits[p : p + 6])))
        for p in range(0, len(bits), 6)
    ]
    return _encode_n(n) + "".join(chars)


def read_graph6_lines(stream: IO[str]) -> Iterator[Graph]:
    """Yield graphs from a stream, one per line; blank lines and ``#`` comments skipped."""
    for lineno, line in enumerate(stream, 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            yield parse_graph6(line)
        except Graph6Error as exc:
            raise Graph6Error(f"line {lineno}: {exc}") from None


def iter_graph6_file(path: Union[str, os.PathLike]) -> Iterator[Graph]:
    with open(path, encoding="ascii") as fh:
        yield from read_graph6_lines(fh)

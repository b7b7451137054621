"""graph6 encoding (McKay's format) for graphs with at most 62 vertices."""

from __future__ import annotations

from pathlib import Path
from typing import IO, Iterable, Iterator

from .graph import MAX_VERTICES, Graph, _from_rows

HEADER = b">>graph6<<"


class Graph6Error(ValueError):
    pass


def to_graph6(g: Graph) -> bytes:
    """Encode ``g``; upper-triangle bits are taken column by column."""
    n = g.n
    out = bytearray([63 + n])
    acc = 0
    nbits = 0
    adj = g.adj
    for j in range(1, n):
        col = adj[j]
        for i in range(j):
            acc = (acc << 1) | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(63 + acc)
                acc = 0
                nbits = 0
    if nbits:
        out.append(63 + (acc << (6 - nbits)))
    return bytes(out)


def from_graph6(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(HEADER):
        data = data[len(HEADER):]
    if not data:
        raise Graph6Error("empty graph6 string")
    for b in data:
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b!r} outside the graph6 range 63..126")
    n = data[0] - 63
    if n > 62:
        raise Graph6Error("multi-byte vertex counts are not supported")
    if n > MAX_VERTICES:
        raise Graph6Error(f"graph has {n} vertices, limit is {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    expected = 1 + (nbits + 5) // 6
    if len(data) != expected:
        raise Graph6Error(f"expected {expected} bytes for n={n}, got {len(data)}")
    rows = [0] * n
    k = 0
    body = data[1:]
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] - 63) >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return _from_rows(rows)


def read_graph6(source: str | Path | IO[bytes] | IO[str]) -> Iterator[Graph]:
    """Iterate over a newline-delimited graph6 file or open stream."""
    if isinstance(source, (str, Path)):
        with open(source, "rb") as fh:
            yield from read_graph6(fh)
        return
    for line in source:
        if isinstance(line, str):
            line = line.encode("ascii")
        line = line.strip()
        if line:
            yield from_graph6(line)


def write_graph6(graphs: Iterable[Graph], sink: IO[bytes]) -> int:
    count = 0
    for g in graphs:
        sink.write(to_graph6(g) + b"\n")
        count += 1
    return count

"""graph6 and edge-list readers/writers."""

from __future__ import annotations

from typing import Iterator, TextIO

from .graph import Graph

HEADER = ">>graph6<<"
MAX_N = 62


class FormatError(ValueError):
    """Malformed input; ``offset`` is the 0-based byte/line position when known."""

    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (at offset {offset})"
        super().__init__(message)


def _upper_triangle(n: int) -> Iterator[tuple[int, int]]:
    # graph6 bit order: x(0,1), x(0,2), x(1,2), x(0,3), ...
    for j in range(1, n):
        for i in range(j):
            yield i, j


def parse_graph6(line: str) -> Graph:
    s = line.strip()
    base = 0
    if s.startswith(HEADER):
        base = len(HEADER)
        s = s[base:]
    if not s:
        raise FormatError("empty graph6 record", base)
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise FormatError(f"character {ch!r} outside graph6 range 63..126", base + pos)
    n = ord(s[0]) - 63
    if n > MAX_N:
        raise FormatError(f"size byte encodes n>{MAX_N}; only single-byte sizes are supported", base)
    pairs = n * (n - 1) // 2
    need = (pairs + 5) // 6
    body = s[1:]
    if len(body) < need:
        raise FormatError(f"record too short: expected {need} data bytes, got {len(body)}", base + 1 + len(body))
    if len(body) > need:
        raise FormatError("trailing garbage after graph6 record", base + 1 + need)
    adj = [0] * n
    for idx, (i, j) in enumerate(_upper_triangle(n)):
        byte = ord(body[idx // 6]) - 63
        if byte >> (5 - idx % 6) & 1:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    if need:
        pad = 6 * need - pairs
        if (ord(body[-1]) - 63) & ((1 << pad) - 1):
            raise FormatError("nonzero padding bits in final byte", base + len(s) - 1)
    return Graph(n, adj)


def emit_graph6(g: Graph) -> str:
    if g.n > MAX_N:
        raise ValueError(f"graph6 output supports n <= {MAX_N}")
    out = [chr(63 + g.n)]
    acc = 0
    nbits = 0
    for i, j in _upper_triangle(g.n):
        acc = acc << 1 | (g.adj[i] >> j & 1)
        nbits += 1
        if nbits == 6:
            out.append(chr(63 + acc))
            acc = nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def parse_edge_list(text: str) -> Graph:
    """First non-blank line is ``n``; each following line is ``u v``."""
    lines = [(no, ln.split()) for no, ln in enumerate(text.splitlines()) if ln.strip()]
    if not lines:
        raise FormatError("edge list is empty")
    first_no, head = lines[0]
    if len(head) != 1 or not head[0].isdigit():
        raise FormatError(f"expected vertex count, got {' '.join(head)!r}", first_no)
    n = int(head[0])
    edges = []
    for no, toks in lines[1:]:
        if len(toks) != 2:
            raise FormatError(f"expected two endpoints, got {len(toks)} tokens", no)
        try:
            u, v = int(toks[0]), int(toks[1])
        except ValueError:
            raise FormatError(f"unparsable token in {' '.join(toks)!r}", no) from None
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"endpoint out of range 0..{n - 1}: {u} {v}", no)
        if u == v:
            raise FormatError(f"self-loop at vertex {u}", no)
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def emit_edge_list(g: Graph) -> str:
    return "\n".join([str(g.n)] + [f"{u} {v}" for u, v in g.edges()]) + "\n"


def looks_like_edge_list(text: str) -> bool:
    # graph6 never uses digits, so a leading integer line means an edge list
    for ln in text.splitlines():
        if ln.strip():
            return ln.strip().isdigit()
    return False


def read_graphs(stream: TextIO) -> Iterator[Graph]:
    """Graphs from a file: one edge list, or one graph6 record per line."""
    text = stream.read()
    if looks_like_edge_list(text):
        yield parse_edge_list(text)
        return
    for ln in text.splitlines():
        if ln.strip():
            yield parse_graph6(ln)

"""graph6 encoder/decoder (bit-exact, undirected graphs up to 64 vertices).

Layout: a size header N(n) followed by the upper triangle of the adjacency
matrix in column order x(0,1), x(0,2), x(1,2), x(0,3), ...  packed six bits
per byte, most significant first, each byte offset by 63.
"""

from __future__ import annotations

from .errors import (
    Graph6CharacterError,
    Graph6HeaderError,
    Graph6LengthError,
    Graph6PaddingError,
    Graph6TrailingDataError,
)
from .graph import MAX_VERTICES, Graph

HEADER = ">>graph6<<"


def _size_header(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    # 63 <= n <= 258047: '~' followed by 18 bits
    return "~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))


def emit_graph6(g: Graph) -> str:
    bits = []
    adj = g.adj
    for j in range(1, g.n):
        row = adj[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k : k + 6]:
            v = (v << 1) | b
        body.append(chr(v + 63))
    return _size_header(g.n) + "".join(body)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 record.

    Surrounding whitespace and the optional ``>>graph6<<`` header are
    accepted; anything else outside the record raises a specific
    :class:`~turanlab.errors.Graph6Error` subclass.
    """
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER) :]
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6CharacterError(f"byte {ord(ch)} at offset {pos} is outside 63..126")
    if not s:
        raise Graph6HeaderError("empty record")
    if s[0] != "~":
        n, offset = ord(s[0]) - 63, 1
    else:
        if len(s) < 4 or s[1] == "~":
            raise Graph6HeaderError("truncated or unsupported long size header")
        n = 0
        for ch in s[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        if n <= 62:
            raise Graph6HeaderError(f"long header used for small order {n}")
        offset = 4
    if n > MAX_VERTICES:
        raise Graph6HeaderError(f"order {n} exceeds the {MAX_VERTICES}-vertex cap")

    nbits = n * (n - 1) // 2
    nbytes = -(-nbits // 6)
    body = s[offset:]
    if len(body) < nbytes:
        raise Graph6LengthError(f"expected {nbytes} body bytes, got {len(body)}")
    if len(body) > nbytes:
        raise Graph6TrailingDataError(f"{len(body) - nbytes} unexpected trailing bytes")

    value = 0
    for ch in body:
        value = (value << 6) | (ord(ch) - 63)
    pad = nbytes * 6 - nbits
    if value & ((1 << pad) - 1):
        raise Graph6PaddingError("non-zero padding bits")
    value >>= pad

    rows = [0] * n
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if value >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k -= 1
    return Graph(n, rows, check=False)

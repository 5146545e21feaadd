"""graph6 encoding of simple graphs.

Adjacency is represented as one Python int bitset per vertex (bit j of
row i set iff ij is an edge).  The byte format: optional ">>graph6<<"
header, the vertex count N(n), then ceil(n(n-1)/2 / 6) bytes of the
upper triangle read column by column, 6 bits per byte, offset by 63.
"""

from __future__ import annotations

from .errors import MalformedGraph6

HEADER = b">>graph6<<"


def _split_header(data: bytes) -> bytes:
    if data.startswith(HEADER):
        data = data[len(HEADER):]
    return data.strip(b"\r\n")


def _decode_n(data: bytes) -> tuple[int, bytes]:
    if not data:
        raise MalformedGraph6("empty input")
    if data[0] != 126:  # '~'
        n = data[0] - 63
        if n < 0:
            raise MalformedGraph6(f"bad size byte {data[0]}")
        return n, data[1:]
    if len(data) >= 2 and data[1] != 126:
        if len(data) < 4:
            raise MalformedGraph6("truncated 3-byte vertex count")
        n = 0
        for b in data[1:4]:
            if not 63 <= b <= 126:
                raise MalformedGraph6(f"bad size byte {b}")
            n = (n << 6) | (b - 63)
        return n, data[4:]
    if len(data) < 8:
        raise MalformedGraph6("truncated 6-byte vertex count")
    n = 0
    for b in data[2:8]:
        if not 63 <= b <= 126:
            raise MalformedGraph6(f"bad size byte {b}")
        n = (n << 6) | (b - 63)
    return n, data[8:]


def _encode_n(n: int) -> bytes:
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in range(30, -1, -6)])
    raise ValueError("vertex count too large for graph6")


def parse_graph6(data: bytes) -> tuple[int, list[int]]:
    """Decode one graph; returns (n, adjacency bitset rows)."""
    if isinstance(data, str):
        data = data.encode("ascii")
    body = _split_header(data)
    n, rest = _decode_n(body)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(rest) != nbytes:
        raise MalformedGraph6(
            f"expected {nbytes} adjacency bytes for n = {n}, got {len(rest)}"
        )
    bits = []
    for b in rest:
        if not 63 <= b <= 126:
            raise MalformedGraph6(f"bad adjacency byte {b}")
        v = b - 63
        bits.extend((v >> s) & 1 for s in range(5, -1, -1))
    if any(bits[nbits:]):
        raise MalformedGraph6("nonzero padding bits")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return n, adj


def encode_graph6(n: int, adj: list[int], header: bool = False) -> bytes:
    """Encode adjacency bitsets as graph6 bytes (no trailing newline)."""
    for i in range(n):
        if adj[i] >> n:
            raise ValueError(f"adjacency row {i} has bits beyond vertex {n - 1}")
        if adj[i] >> i & 1:
            raise ValueError(f"self-loop at vertex {i}")
    bits = []
    for j in range(1, n):
        for i in range(j):
            bit = adj[i] >> j & 1
            if bit != (adj[j] >> i & 1):
                raise ValueError(f"adjacency not symmetric at ({i},{j})")
            bits.append(bit)
    while len(bits) % 6:
        bits.append(0)
    out = bytearray(HEADER if header else b"")
    out += _encode_n(n)
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k : k + 6]:
            v = (v << 1) | b
        out.append(v + 63)
    return bytes(out)

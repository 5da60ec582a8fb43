"""graph6 / sparse6 codecs and a plain edge-list fallback.

Both formats follow the de-facto standard headerless byte layout; the
optional ``>>graph6<<`` / ``>>sparse6<<`` prefixes are tolerated on input
and never produced on output.
"""

from __future__ import annotations

from .errors import GraphFormatError
from .graph import Graph

_G6_HEADER = ">>graph6<<"
_S6_HEADER = ">>sparse6<<"


# -- shared number encoding --------------------------------------------------


def _encode_n(n: int) -> list[int]:
    if n < 0 or n >= 2**36:
        raise GraphFormatError(f"vertex count {n} out of encodable range")
    if n <= 62:
        return [n + 63]
    if n <= 258047:
        return [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    return [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]


def _decode_n(data: bytes, pos: int) -> tuple[int, int]:
    if pos >= len(data):
        raise GraphFormatError("truncated input: missing vertex count", pos)
    c = data[pos] - 63
    if c < 0 or c > 63:
        raise GraphFormatError(f"invalid byte {data[pos]!r}", pos)
    if c < 63:
        return c, pos + 1
    if pos + 1 < len(data) and data[pos + 1] - 63 == 63:
        chunk = data[pos + 2 : pos + 8]
        if len(chunk) < 6:
            raise GraphFormatError("truncated wide vertex count", pos)
        n = 0
        for b in chunk:
            if not 63 <= b <= 126:
                raise GraphFormatError(f"invalid byte {b!r}", pos)
            n = (n << 6) | (b - 63)
        return n, pos + 8
    chunk = data[pos + 1 : pos + 4]
    if len(chunk) < 3:
        raise GraphFormatError("truncated wide vertex count", pos)
    n = 0
    for b in chunk:
        if not 63 <= b <= 126:
            raise GraphFormatError(f"invalid byte {b!r}", pos)
        n = (n << 6) | (b - 63)
    return n, pos + 4


def _strip(text: str | bytes, header: str) -> bytes:
    if isinstance(text, str):
        text = text.encode("ascii")
    text = text.strip()
    if text.startswith(header.encode("ascii")):
        text = text[len(header):]
    return text


# -- graph6 -------------------------------------------------------------------


def to_graph6(g: Graph) -> str:
    """Headerless graph6 line for ``g`` (no trailing newline)."""
    out = _encode_n(g.n)
    bits = []
    adj = g.adjacency
    for v in range(g.n):
        for u in range(v):
            bits.append(adj[u] >> v & 1)
    while len(bits) % 6:
        bits.append(0)
    for i in range(0, len(bits), 6):
        word = 0
        for b in bits[i : i + 6]:
            word = word << 1 | b
        out.append(word + 63)
    return bytes(out).decode("ascii")


def from_graph6(text: str | bytes) -> Graph:
    data = _strip(text, _G6_HEADER)
    if data.startswith(b":"):
        raise GraphFormatError("sparse6 data passed to graph6 parser", 0)
    n, pos = _decode_n(data, 0)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(data) - pos < need:
        raise GraphFormatError(
            f"graph6 body too short for n={n}", len(data)
        )
    if len(data) - pos > need:
        raise GraphFormatError("trailing bytes after graph6 body", pos + need)
    edges = []
    bit = 0
    word = 0
    have = 0
    for v in range(n):
        for u in range(v):
            if have == 0:
                b = data[pos + bit // 6]
                if not 63 <= b <= 126:
                    raise GraphFormatError(
                        f"invalid byte {b!r}", pos + bit // 6
                    )
                word = b - 63
                have = 6
            if word >> (have - 1) & 1:
                edges.append((u, v))
            have -= 1
            bit += 1
    return Graph(n, edges)


# -- sparse6 ------------------------------------------------------------------


def to_sparse6(g: Graph) -> str:
    """Headerless sparse6 line for ``g`` (with the leading ``:``)."""
    n = g.n
    out = [ord(":")] + _encode_n(n)
    k = 1
    while (1 << k) < n:
        k += 1

    bits: list[int] = []

    def put(x: int, width: int) -> None:
        for i in range(width - 1, -1, -1):
            bits.append(x >> i & 1)

    cur = 0
    for v, u in sorted((max(e), min(e)) for e in g.edges):
        if v == cur:
            bits.append(0)
            put(u, k)
        elif v == cur + 1:
            cur += 1
            bits.append(1)
            put(u, k)
        else:
            cur = v
            bits.append(1)
            put(v, k)
            bits.append(0)
            put(u, k)
    pad = (-len(bits)) % 6
    # Padding with 1s could otherwise be read as a loop on vertex n-1
    # when n is a power of two and a full (1, x) group fits in the pad.
    if k < 6 and n == (1 << k) and pad >= k and cur < n - 1:
        bits.append(0)
        pad = (-len(bits)) % 6
    bits.extend([1] * pad)
    for i in range(0, len(bits), 6):
        word = 0
        for b in bits[i : i + 6]:
            word = word << 1 | b
        out.append(word + 63)
    return bytes(out).decode("ascii")


def from_sparse6(text: str | bytes) -> Graph:
    data = _strip(text, _S6_HEADER)
    if not data.startswith(b":"):
        raise GraphFormatError("sparse6 data must start with ':'", 0)
    n, pos = _decode_n(data, 1)
    k = 1
    while (1 << k) < n:
        k += 1
    bits: list[int] = []
    for i in range(pos, len(data)):
        b = data[i]
        if not 63 <= b <= 126:
            raise GraphFormatError(f"invalid byte {b!r}", i)
        bits.extend((b - 63) >> s & 1 for s in range(5, -1, -1))
    edges = []
    cur = 0
    i = 0
    while i + k < len(bits):
        if bits[i]:
            cur += 1
        x = 0
        for j in range(i + 1, i + 1 + k):
            x = x << 1 | bits[j]
        i += 1 + k
        if cur >= n:
            break
        if x > cur:
            cur = x
        elif x != cur:  # loops cannot occur; guard keeps graphs simple
            edges.append((x, cur))
    return Graph(n, edges)


def parse_graph_line(text: str | bytes) -> Graph:
    """Parse one graph6 or sparse6 line, auto-detected."""
    if isinstance(text, bytes):
        probe = text.strip()
    else:
        probe = text.strip().encode("ascii")
    if probe.startswith(b">>sparse6<<") or probe.startswith(b":"):
        return from_sparse6(text)
    return from_graph6(text)


# -- edge-list fallback --------------------------------------------------------


def to_edge_list(g: Graph) -> str:
    """``u v`` per line, preceded by a ``n <count>`` header line so that
    isolated vertices survive a round trip."""
    lines = [f"n {g.n}"]
    lines += [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    edges = []
    n = None
    seen_max = -1
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n" and len(parts) == 2:
            n = int(parts[1])
            continue
        if len(parts) != 2:
            raise GraphFormatError(f"line {ln}: expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {ln}: non-integer endpoint") from None
        edges.append((u, v))
        seen_max = max(seen_max, u, v)
    if n is None:
        n = seen_max + 1
    return Graph(max(n, 0), edges)

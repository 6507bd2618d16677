"""graph6 encoding and decoding (bit-exact with the nauty/networkx format)."""

from __future__ import annotations

from .graph import Graph, LabeledPair

MAX_N = 258047


class Graph6Error(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"graph6 parse error at byte {offset}: {message}")
        self.offset = offset


def _size_bytes(n: int) -> list[int]:
    if n < 63:
        return [n]
    if n <= MAX_N:
        return [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    raise ValueError(f"graph6 supports n <= {MAX_N}")


def emit_graph6(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    bits.extend([0] * (-len(bits) % 6))
    data = _size_bytes(g.n)
    for k in range(0, len(bits), 6):
        chunk = 0
        for b in bits[k:k + 6]:
            chunk = (chunk << 1) | b
        data.append(chunk)
    return "".join(chr(c + 63) for c in data)


def parse_graph6(text: str) -> Graph:
    s = text.strip("\n").rstrip("\r")
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
        base = len(">>graph6<<")
    else:
        base = 0
    vals = []
    for i, ch in enumerate(s):
        c = ord(ch)
        if not 63 <= c <= 126:
            raise Graph6Error(f"byte {c!r} outside 63..126", base + i)
        vals.append(c - 63)
    if not vals:
        raise Graph6Error("empty input", base)
    if vals[0] < 63:
        n, pos = vals[0], 1
    else:
        if len(vals) < 4:
            raise Graph6Error("truncated length header", base + len(vals))
        if vals[1] == 63:
            raise Graph6Error("8-byte length header (n > 258047) unsupported", base + 1)
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        pos = 4
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = vals[pos:]
    if len(body) < need:
        raise Graph6Error(f"expected {need} data bytes, got {len(body)}", base + len(vals))
    if len(body) > need:
        raise Graph6Error("trailing garbage", base + pos + need)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    # padding bits must be zero for a canonical encoding
    if nbits % 6 and body[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise Graph6Error("nonzero padding bits", base + pos + need - 1)
    return Graph(n, edges)


def pair_to_json(p: LabeledPair) -> dict:
    return {"graph6": emit_graph6(p.graph), "labels": list(p.labels)}


def pair_from_json(obj: dict) -> LabeledPair:
    return LabeledPair(parse_graph6(obj["graph6"]), tuple(obj["labels"]))

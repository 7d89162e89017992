"""graph6 and 1-based edge-list text formats."""

from .graph import Graph, GraphError

HEADER = ">>graph6<<"


class FormatError(GraphError):
    pass


def _encode_n(n):
    if n <= 62:
        return [n]
    if n <= 258047:
        return [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    return [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]


def _decode_n(data):
    """Return (n, number of 6-bit values consumed)."""
    if not data:
        raise FormatError("empty graph6 string")
    if data[0] != 63:
        return data[0], 1
    if len(data) >= 2 and data[1] == 63:
        if len(data) < 8:
            raise FormatError("truncated 8-byte length header")
        n = 0
        for x in data[2:8]:
            n = (n << 6) | x
        return n, 8
    if len(data) < 4:
        raise FormatError("truncated 4-byte length header")
    return (data[1] << 12) | (data[2] << 6) | data[3], 4


def encode_graph6(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    bits += [0] * (-len(bits) % 6)
    body = [int("".join(map(str, bits[k:k + 6])), 2) for k in range(0, len(bits), 6)]
    return "".join(chr(x + 63) for x in _encode_n(g.n) + body)


def parse_graph6(text: str, label=None) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    data = []
    for pos, ch in enumerate(s):
        c = ord(ch)
        if not 63 <= c <= 126:
            raise FormatError(f"character {ch!r} at position {pos} outside range 63..126")
        data.append(c - 63)
    n, used = _decode_n(data)
    if n < 1:
        raise FormatError("graph6 graph with no vertices")
    nbits = n * (n - 1) // 2
    body = data[used:]
    if len(body) != (nbits + 5) // 6:
        raise FormatError(f"expected {(nbits + 5) // 6} data characters for n={n}, got {len(body)}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    if nbits % 6 and body[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise FormatError("nonzero padding bits")
    return Graph(n, tuple(edges), label)


def read_graph6_file(path):
    """Yield (line number, Graph) for each non-blank line; line numbers are 1-based."""
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if line:
                yield lineno, parse_graph6(line, label=f"{path}:{lineno}")


def parse_edge_list(text: str, label=None) -> Graph:
    """Parse ``n <count>`` followed by ``u v`` lines (1-based); ``#`` starts a comment."""
    n = None
    edges = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        if n is None:
            if len(tok) != 2 or tok[0] != "n" or not tok[1].isdigit():
                raise FormatError(f"line {lineno}: expected header 'n <count>', got {raw!r}")
            n = int(tok[1])
            if n < 1:
                raise FormatError(f"line {lineno}: vertex count must be >= 1")
            continue
        if len(tok) != 2 or not all(t.lstrip("-").isdigit() for t in tok):
            raise FormatError(f"line {lineno}: cannot parse edge {raw!r}")
        u, v = int(tok[0]), int(tok[1])
        if not (1 <= u <= n and 1 <= v <= n):
            raise FormatError(f"line {lineno}: vertex id out of range 1..{n} in {raw!r}")
        if u == v:
            raise FormatError(f"line {lineno}: self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise FormatError(f"line {lineno}: duplicate edge {key}")
        seen.add(key)
        edges.append((u - 1, v - 1))
    if n is None:
        raise FormatError("missing 'n <count>' header")
    return Graph(n, tuple(edges), label)


def format_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{u + 1} {v + 1}" for u, v in g.edges]
    return "\n".join(lines) + "\n"

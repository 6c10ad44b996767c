"""Plain-text hypergraph files.

Grammar (ASCII, LF line endings, `#` starts a comment, blank lines ignored):

    dhg 1            <- magic + format version ("uhg 1" for undirected)
    n m
    weight k_t v_1 ... v_{k_t} k_h u_1 ... u_{k_h}     (directed record)
    weight k v_1 ... v_k                               (undirected record)

Weights are serialized with repr(), the shortest decimal that round-trips,
so parse(write(H)) is the identity on canonical hypergraphs.
"""

from __future__ import annotations

from .core import (
    DirectedHyperarc,
    DirectedHypergraph,
    Hypergraph,
    UndirectedHyperedge,
    UndirectedHypergraph,
)


class ParseError(ValueError):
    """Parse failure; category is one of the four documented classes."""

    def __init__(self, category: str, line: int, detail: str):
        self.category = category
        self.line = line
        super().__init__(f"{category} at line {line}: {detail}")


def _fail(category: str, line: int, detail: str):
    raise ParseError(category, line, detail)


def _content_lines(text: str):
    """Yield (line_number, tokens) for non-blank, non-comment lines."""
    for lineno, raw in enumerate(text.split("\n"), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            yield lineno, body.split()


def _int(tok: str, lineno: int, what: str, category: str = "malformed header") -> int:
    try:
        return int(tok)
    except ValueError:
        _fail(category, lineno, f"{what} {tok!r} is not an integer")


def parse(data: bytes | str) -> Hypergraph:
    """Parse a hypergraph file; see the module docstring for the grammar."""
    if isinstance(data, bytes):
        try:
            text = data.decode("ascii")
        except UnicodeDecodeError as exc:
            raise ParseError("malformed header", 1, f"not ASCII: {exc}") from None
    else:
        text = data
    lines = _content_lines(text)

    try:
        lineno, toks = next(lines)
    except StopIteration:
        _fail("malformed header", 1, "empty file")
    if len(toks) != 2 or toks[0] not in ("dhg", "uhg") or toks[1] != "1":
        _fail("malformed header", lineno, f"expected 'dhg 1' or 'uhg 1', got {' '.join(toks)!r}")
    directed = toks[0] == "dhg"

    try:
        lineno, toks = next(lines)
    except StopIteration:
        _fail("malformed header", lineno, "missing 'n m' line")
    if len(toks) != 2:
        _fail("malformed header", lineno, f"expected 'n m', got {' '.join(toks)!r}")
    n = _int(toks[0], lineno, "n")
    m = _int(toks[1], lineno, "m")
    if n < 0 or m < 0:
        _fail("malformed header", lineno, f"negative n or m ({n}, {m})")

    records = []
    for lineno, toks in lines:
        records.append((lineno, toks))
    if len(records) != m:
        last = records[-1][0] if records else lineno
        _fail("arity mismatch", last, f"header promises {m} records, found {len(records)}")

    def read_weight(toks, lineno):
        try:
            w = float(toks[0])
        except ValueError:
            _fail("nonpositive weight", lineno, f"weight {toks[0]!r} is not a number")
        if not w > 0:
            _fail("nonpositive weight", lineno, f"weight must be positive, got {toks[0]}")
        return w

    def read_members(toks, start, lineno, side):
        if start >= len(toks):
            _fail("arity mismatch", lineno, f"missing {side} count")
        k = _int(toks[start], lineno, f"{side} count", category="arity mismatch")
        if k < 1:
            _fail("arity mismatch", lineno, f"{side} count must be >= 1, got {k}")
        members = toks[start + 1 : start + 1 + k]
        if len(members) != k:
            _fail("arity mismatch", lineno, f"{side} promises {k} vertices, found {len(members)}")
        out = []
        for tok in members:
            v = _int(tok, lineno, "vertex", category="index out of range")
            if not 0 <= v < n:
                _fail("index out of range", lineno, f"vertex {v} not in [0, {n})")
            out.append(v)
        return out, start + 1 + k

    if directed:
        arcs = []
        for lineno, toks in records:
            w = read_weight(toks, lineno)
            tail, pos = read_members(toks, 1, lineno, "tail")
            head, pos = read_members(toks, pos, lineno, "head")
            if pos != len(toks):
                _fail("arity mismatch", lineno, f"{len(toks) - pos} trailing tokens")
            arcs.append(DirectedHyperarc(tuple(tail), tuple(head), w))
        return DirectedHypergraph(n, tuple(arcs))

    edges = []
    for lineno, toks in records:
        w = read_weight(toks, lineno)
        verts, pos = read_members(toks, 1, lineno, "vertex")
        if pos != len(toks):
            _fail("arity mismatch", lineno, f"{len(toks) - pos} trailing tokens")
        edges.append(UndirectedHyperedge(tuple(verts), w))
    return UndirectedHypergraph(n, tuple(edges))


def write(H: Hypergraph) -> bytes:
    """Serialize canonically; parse(write(H)) == H."""
    out = []
    if isinstance(H, DirectedHypergraph):
        out.append("dhg 1")
        out.append(f"{H.n} {H.m}")
        for f in H.arcs:
            toks = [repr(f.weight), str(len(f.tail)), *map(str, f.tail),
                    str(len(f.head)), *map(str, f.head)]
            out.append(" ".join(toks))
    else:
        out.append("uhg 1")
        out.append(f"{H.n} {H.m}")
        for f in H.edges:
            toks = [repr(f.weight), str(len(f.vertices)), *map(str, f.vertices)]
            out.append(" ".join(toks))
    return ("\n".join(out) + "\n").encode("ascii")


def load(path) -> Hypergraph:
    with open(path, "rb") as fh:
        return parse(fh.read())


def dump(H: Hypergraph, path) -> None:
    with open(path, "wb") as fh:
        fh.write(write(H))

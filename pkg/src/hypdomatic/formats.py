"""Line-oriented text formats.

HGF (hypergraph)::

    # optional comments
    p hg <n> <m>
    e <v1> ... <vk>        (m lines, 0-based vertices)

Partition::

    p part <v|e> <0|1> <num_classes>
    c <i1> <i2> ...        (num_classes lines)
"""

from __future__ import annotations

from hypdomatic.domination import DomaticPartition
from hypdomatic.errors import DuplicateEdge, EmptyEdge, IndexOutOfRange, InvalidParams, ParseError
from hypdomatic.hypergraph import Hypergraph, make_hypergraph


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        values = [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None
    if any(v < 0 for v in values):
        raise ParseError("indices must be non-negative", lineno)
    return values


def write_hgf(h: Hypergraph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.append(f"# {comment}")
    lines.append(f"p hg {h.n} {h.m}")
    lines.extend("e " + " ".join(map(str, e)) for e in h.edges)
    return "\n".join(lines) + "\n"


def parse_hgf(text: str) -> Hypergraph:
    header = None
    edges: list[list[int]] = []
    edge_lines: list[int] = []
    for lineno, tokens in _content_lines(text):
        tag = tokens[0]
        if header is None:
            if tag != "p" or len(tokens) != 4 or tokens[1] != "hg":
                raise ParseError("expected header 'p hg <n> <m>'", lineno)
            header = _ints(tokens[2:], lineno)
            continue
        if tag == "p":
            raise ParseError("duplicate header", lineno)
        if tag != "e":
            raise ParseError(f"unknown line type {tag!r}", lineno)
        if len(edges) == header[1]:
            raise ParseError(f"more than the declared {header[1]} edge lines", lineno)
        edge = _ints(tokens[1:], lineno)
        if len(set(edge)) != len(edge):
            raise ParseError("edge repeats a vertex", lineno)
        edges.append(edge)
        edge_lines.append(lineno)
    if header is None:
        raise ParseError("missing header 'p hg <n> <m>'")
    n, m = header
    if len(edges) != m:
        raise ParseError(f"header declares {m} edges but {len(edges)} were given")
    try:
        return make_hypergraph(n, edges)
    except (IndexOutOfRange, EmptyEdge, DuplicateEdge, InvalidParams) as exc:
        pos = getattr(exc, "position", None)
        if pos is None:
            raise
        line = edge_lines[pos]
        err = type(exc)(f"line {line}: {exc}", pos)
        err.line = line
        raise err from None


def write_partition(p: DomaticPartition) -> str:
    lines = [f"p part {'v' if p.kind == 'vertex' else 'e'} {int(p.total)} {len(p.classes)}"]
    lines.extend("c " + " ".join(map(str, cls)) for cls in p.classes)
    return "\n".join(lines) + "\n"


def parse_partition(text: str) -> DomaticPartition:
    header = None
    classes: list[tuple[int, ...]] = []
    for lineno, tokens in _content_lines(text):
        if header is None:
            if tokens[0] != "p" or len(tokens) != 5 or tokens[1] != "part":
                raise ParseError("expected header 'p part <v|e> <0|1> <num_classes>'", lineno)
            if tokens[2] not in ("v", "e") or tokens[3] not in ("0", "1"):
                raise ParseError("kind must be v|e and total must be 0|1", lineno)
            header = (tokens[2], tokens[3] == "1", _ints(tokens[4:], lineno)[0])
            continue
        if tokens[0] != "c":
            raise ParseError(f"unknown line type {tokens[0]!r}", lineno)
        # order inside a class is kept so the validator sees repeats
        classes.append(tuple(_ints(tokens[1:], lineno)))
    if header is None:
        raise ParseError("missing partition header")
    kind, total, count = header
    if len(classes) != count:
        raise ParseError(f"header declares {count} classes but {len(classes)} were given")
    return DomaticPartition("vertex" if kind == "v" else "edge", total, tuple(classes))


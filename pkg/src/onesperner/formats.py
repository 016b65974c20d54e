"""Line-oriented text formats for hypergraphs (HG) and graphs (GR).

An HG document::

    HG 1
    V a b c      # vertex list; a bare "V" means no vertices
    E a b        # one hyperedge per line; a bare "E" is the empty edge

No "E" line at all means the edge set is empty, while a single bare "E"
line means the edge set is {{}}.  '#' starts a comment anywhere on a line;
blank lines are ignored.  A GR document is the same except the header is
"GR 1" and every "E" line names exactly two distinct vertices.
"""

from __future__ import annotations

from typing import Iterator

from .core import Graph, Hypergraph, check_label
from .errors import InvalidLabel, ParseError


def _logical_lines(text: str, offset: int = 0) -> list[tuple[int, list[str]]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1 + offset):
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            out.append((lineno, stripped.split()))
    return out


def _parse_vertex_line(lines, pos, total_lines):
    if pos >= len(lines):
        raise ParseError("missing 'V' line", total_lines)
    lineno, tokens = lines[pos]
    if tokens[0] != "V":
        raise ParseError(f"expected 'V' line, found {tokens[0]!r}", lineno)
    labels = tokens[1:]
    seen: set[str] = set()
    for lbl in labels:
        try:
            check_label(lbl)
        except InvalidLabel as exc:
            raise ParseError(str(exc), lineno) from exc
        if lbl in seen:
            raise ParseError(f"vertex {lbl!r} listed twice", lineno)
        seen.add(lbl)
    return lineno, labels


def _check_header(lines, expected: str, total_lines: int):
    if not lines:
        raise ParseError(f"empty document, expected '{expected} 1' header", 1)
    lineno, tokens = lines[0]
    if tokens != [expected, "1"]:
        raise ParseError(f"expected '{expected} 1' header", lineno)


def parse_hg(text: str, _offset: int = 0) -> Hypergraph:
    """Parse one HG document.  Raises ParseError with the offending line."""
    total = len(text.splitlines()) + _offset
    lines = _logical_lines(text, _offset)
    _check_header(lines, "HG", total)
    _, labels = _parse_vertex_line(lines, 1, total)
    index = {lbl: i for i, lbl in enumerate(labels)}
    masks: list[int] = []
    seen: set[int] = set()
    for lineno, tokens in lines[2:]:
        if tokens[0] != "E":
            raise ParseError(f"expected 'E' line, found {tokens[0]!r}", lineno)
        mask = 0
        for lbl in tokens[1:]:
            j = index.get(lbl)
            if j is None:
                raise ParseError(f"edge mentions unknown vertex {lbl!r}", lineno)
            mask |= 1 << j
        if mask in seen:
            raise ParseError("duplicate edge", lineno)
        seen.add(mask)
        masks.append(mask)
    return Hypergraph(tuple(labels), tuple(masks))


def format_hg(h: Hypergraph) -> str:
    """Serialize a hypergraph; the result re-parses to an equal value."""
    lines = ["HG 1"]
    lines.append("V" + ("".join(" " + v for v in h.vertices)))
    for e in h.edges:
        lines.append("E" + ("".join(" " + v for v in h.labels_of(e))))
    return "\n".join(lines) + "\n"


def iter_hg_documents(text: str) -> Iterator[Hypergraph]:
    """Parse a stream of HG documents; a new 'HG 1' header starts each one."""
    raw_lines = text.splitlines()
    starts = []
    for i, raw in enumerate(raw_lines):
        if raw.split("#", 1)[0].split() == ["HG", "1"]:
            starts.append(i)
    if not starts:
        stripped = [ln for ln in raw_lines if ln.split("#", 1)[0].strip()]
        if stripped:
            raise ParseError("expected 'HG 1' header", 1)
        return
    head = raw_lines[: starts[0]]
    if any(ln.split("#", 1)[0].strip() for ln in head):
        raise ParseError("content before first 'HG 1' header", 1)
    bounds = starts + [len(raw_lines)]
    for a, b in zip(bounds, bounds[1:]):
        yield parse_hg("\n".join(raw_lines[a:b]), _offset=a)


def parse_gr(text: str) -> Graph:
    """Parse one GR document.  Raises ParseError with the offending line."""
    total = len(text.splitlines())
    lines = _logical_lines(text)
    _check_header(lines, "GR", total)
    _, labels = _parse_vertex_line(lines, 1, total)
    index = {lbl: i for i, lbl in enumerate(labels)}
    pairs: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, tokens in lines[2:]:
        if tokens[0] != "E":
            raise ParseError(f"expected 'E' line, found {tokens[0]!r}", lineno)
        if len(tokens) != 3:
            raise ParseError("graph edge lines need exactly two vertices", lineno)
        try:
            i, j = index[tokens[1]], index[tokens[2]]
        except KeyError as exc:
            raise ParseError(f"edge mentions unknown vertex {exc.args[0]!r}", lineno)
        if i == j:
            raise ParseError(f"loop at vertex {tokens[1]!r}", lineno)
        key = (min(i, j), max(i, j))
        if key in seen:
            raise ParseError("duplicate edge", lineno)
        seen.add(key)
        pairs.append(key)
    return Graph(tuple(labels), tuple(pairs))


def format_gr(g: Graph) -> str:
    """Serialize a graph; the result re-parses to an equal value."""
    lines = ["GR 1"]
    lines.append("V" + ("".join(" " + v for v in g.vertices)))
    for i, j in g.edges:
        lines.append(f"E {g.vertices[i]} {g.vertices[j]}")
    return "\n".join(lines) + "\n"

"""Gluing of hypergraphs, its inverse, and the full recursive decomposition.

Gluing two vertex-disjoint hypergraphs H1 = (V1, E1) and H2 = (V2, E2) at a
fresh vertex z produces the hypergraph on V1 + V2 + {z} whose edges are
{z} + e for e in E1 followed by V1 + e for e in E2.  In incidence-matrix
form that is the block matrix

    [ 1 | A1 | 0  ]
    [ 0 | 1  | A2 ]

with z indexing the first column.  A gluing is *safe* when the result is
1-Sperner, which fails exactly when E1 = {V1} and E2 = {{}}.  Every
1-Sperner hypergraph with at least one vertex splits at some vertex, so
repeated splitting yields a binary tree whose leaves are the two vertex-free
hypergraphs; rebuilding the tree recovers the input up to vertex and edge
order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple, Union

from .core import (
    Hypergraph,
    VertexId,
    check_label,
    is_one_sperner,
    iter_bits,
    k_of,
    vertex_classes,
)
from .errors import (
    EmptyVertexSet,
    NotDecomposable,
    NotOneSperner,
    NotUniform,
    ParseError,
    UnknownVertex,
    UnsafeGluing,
    VertexCollision,
)


@dataclass(frozen=True)
class Leaf:
    """A vertex-free hypergraph: ({}, {{}}) if empty_edge else ({}, {})."""

    empty_edge: bool

    def hypergraph(self) -> Hypergraph:
        return Hypergraph((), (0,) if self.empty_edge else ())


@dataclass(frozen=True)
class Node:
    """An internal tree node: glue(rebuild(left), rebuild(right), z)."""

    z: VertexId
    left: "DecompositionTree"
    right: "DecompositionTree"


DecompositionTree = Union[Leaf, Node]


def glue(h1: Hypergraph, h2: Hypergraph, z: VertexId) -> Hypergraph:
    """Glue two vertex-disjoint hypergraphs at a fresh vertex z.

    Vertex order of the result is (z, V1 order, V2 order) and edge order is
    E1-derived edges first, matching the block incidence form.
    """
    check_label(z)
    overlap = set(h1.vertices) & set(h2.vertices)
    if overlap:
        raise VertexCollision(f"factors share vertices {sorted(overlap)}")
    if z in h1.vertices or z in h2.vertices:
        raise VertexCollision(f"gluing vertex {z!r} already occurs in a factor")
    n1 = h1.n
    v1_block = ((1 << n1) - 1) << 1
    shift2 = 1 + n1
    edges = tuple((e << 1) | 1 for e in h1.edges) + tuple(
        (e << shift2) | v1_block for e in h2.edges
    )
    return Hypergraph((z,) + h1.vertices + h2.vertices, edges)


def is_safe(h1: Hypergraph, h2: Hypergraph) -> bool:
    """True unless E1 = {V1} and E2 = {{}} (the one gluing that breaks Sperner)."""
    return not (h1.edges == (h1.full_mask,) and h2.edges == (0,))


def is_z_decomposable(h: Hypergraph, z: VertexId) -> bool:
    """True iff for all edges e, f with z in e and z not in f: e - {z} is in f."""
    idx = h.index()
    if z not in idx:
        raise UnknownVertex(f"unknown vertex {z!r}")
    bit = 1 << idx[z]
    with_z = [e & ~bit for e in h.edges if e & bit]
    without_z = [f for f in h.edges if not f & bit]
    for core in with_z:
        for f in without_z:
            if core & ~f:
                return False
    return True


def _extract(mask: int, positions: list[int]) -> int:
    out = 0
    for new_j, old_j in enumerate(positions):
        out |= ((mask >> old_j) & 1) << new_j
    return out


def split_at(h: Hypergraph, z: VertexId) -> tuple[Hypergraph, Hypergraph]:
    """Invert a gluing at vertex z: glue(H1, H2, z) reproduces h.

    V1 is the union of e - {z} over edges containing z (so isolated leftovers
    land in V2), E1 restricts those edges, and E2 = {f - V1 : z not in f}.
    Every z-free edge must contain all of V1; otherwise the split fails.
    """
    if not is_z_decomposable(h, z):
        raise NotDecomposable(f"hypergraph is not decomposable at {z!r}")
    zbit = 1 << h.index()[z]
    v1_mask = 0
    for e in h.edges:
        if e & zbit:
            v1_mask |= e & ~zbit
    v2_mask = h.full_mask & ~zbit & ~v1_mask
    pos1 = list(iter_bits(v1_mask))
    pos2 = list(iter_bits(v2_mask))
    e1 = []
    e2 = []
    for e in h.edges:
        if e & zbit:
            e1.append(_extract(e & ~zbit, pos1))
        else:
            if v1_mask & ~e:
                raise NotDecomposable(
                    f"edge {sorted(h.labels_of(e))} avoids {z!r} but misses part of V1"
                )
            e2.append(_extract(e & ~v1_mask, pos2))
    h1 = Hypergraph(tuple(h.vertices[j] for j in pos1), tuple(e1))
    h2 = Hypergraph(tuple(h.vertices[j] for j in pos2), tuple(e2))
    return h1, h2


class UniformCore(NamedTuple):
    """Witness for uniform 1-Sperner hypergraphs with edges of size r.

    kind "common": members has size r - 1 and lies inside every edge.
    kind "cover":  members has size r + 1 and contains every edge.
    """

    kind: str
    members: frozenset[VertexId]


def uniform_core(h: Hypergraph) -> UniformCore:
    """Find the common (r-1)-core or the (r+1)-cover of a uniform 1-Sperner family.

    Follows the constructive argument: with at most one edge any (r-1)-subset
    of it works (the first in vertex order is returned); otherwise the
    intersection of the first two edges is the candidate core, and if some
    edge misses it, their union covers everything.
    """
    if not is_one_sperner(h):
        raise NotOneSperner("uniform core requires a 1-Sperner hypergraph")
    if not h.edges:
        raise NotUniform("no hyperedges: the uniformity degree is undetermined")
    sizes = {e.bit_count() for e in h.edges}
    if len(sizes) != 1:
        raise NotUniform(f"edge sizes {sorted(sizes)} are not uniform")
    r = sizes.pop()
    if r < 1:
        raise NotUniform("uniformity degree must be at least 1")
    if len(h.edges) == 1:
        bits = list(iter_bits(h.edges[0]))[: r - 1]
        core = sum(1 << j for j in bits)
        return UniformCore("common", frozenset(h.labels_of(core)))
    e, f = h.edges[0], h.edges[1]
    core = e & f
    if all(core & ~g == 0 for g in h.edges):
        return UniformCore("common", frozenset(h.labels_of(core)))
    cover = e | f
    for g in h.edges:
        if g & ~cover:
            raise AssertionError("internal: union of first two edges must cover all")
    return UniformCore("cover", frozenset(h.labels_of(cover)))


def find_decomposition_vertex(h: Hypergraph) -> VertexId:
    """Pick a vertex z at which the hypergraph splits, deterministically.

    Selection policy, in vertex order within each step: (1) first isolated,
    else first universal vertex; (2) if the per-vertex maximum edge sizes
    k(v) differ, the first v of minimum k(v) when every edge avoiding v has
    size >= k(v); (3) otherwise locate candidates through the uniform core of
    the maximum-size edge subfamily.  A final scan of all vertices guarantees
    termination on any 1-Sperner input.
    """
    if not is_one_sperner(h):
        raise NotOneSperner("decomposition requires a 1-Sperner hypergraph")
    if h.n == 0:
        raise EmptyVertexSet("the vertex-free hypergraphs do not decompose")
    classes = vertex_classes(h)
    for v in h.vertices:
        if v in classes.isolated:
            return v
    for v in h.vertices:
        if v in classes.universal:
            return v
    kv = {v: k_of(h, v) for v in h.vertices}
    values = set(kv.values())
    idx = h.index()
    if len(values) > 1:
        kmin = min(values)
        v = next(u for u in h.vertices if kv[u] == kmin)
        bit = 1 << idx[v]
        if all(
            f.bit_count() >= kmin for f in h.edges if not f & bit
        ) and is_z_decomposable(h, v):
            return v
    else:
        k = values.pop()
        candidates: tuple[VertexId, ...]
        if k <= 1:
            candidates = h.vertices
        else:
            top = Hypergraph(
                h.vertices, tuple(e for e in h.edges if e.bit_count() == k)
            )
            kind, members = uniform_core(top)
            if kind == "common":
                if len(top.edges) == len(h.edges):
                    candidates = h.vertices
                else:
                    union = 0
                    for e in top.edges:
                        union |= e
                    y_mask = union & ~h.mask_of(members)
                    candidates = h.labels_of(y_mask)
            else:
                inter = h.full_mask
                for e in top.edges:
                    inter &= e
                candidates = h.labels_of(h.full_mask & ~inter)
        for v in candidates:
            if is_z_decomposable(h, v):
                return v
    for v in h.vertices:
        if is_z_decomposable(h, v):
            return v
    raise NotDecomposable("internal: no decomposition vertex found")


def decompose_fully(h: Hypergraph) -> DecompositionTree:
    """Recursively split until only the two vertex-free hypergraphs remain."""
    if not is_one_sperner(h):
        raise NotOneSperner("decomposition requires a 1-Sperner hypergraph")
    if h.n == 0:
        return Leaf(empty_edge=h.edges == (0,))
    z = find_decomposition_vertex(h)
    h1, h2 = split_at(h, z)
    return Node(z, decompose_fully(h1), decompose_fully(h2))


def rebuild(t: DecompositionTree) -> Hypergraph:
    """Glue a decomposition tree back together, bottom up.

    Raises UnsafeGluing (naming the offending node) when a node violates the
    safety condition, and VertexCollision when tree labels repeat.
    """
    if isinstance(t, Leaf):
        return t.hypergraph()
    left = rebuild(t.left)
    right = rebuild(t.right)
    if not is_safe(left, right):
        raise UnsafeGluing(f"unsafe gluing at node {t.z!r}", z=t.z)
    return glue(left, right, t.z)


def internal_nodes(t: DecompositionTree) -> list[Node]:
    """All internal nodes in preorder."""
    if isinstance(t, Leaf):
        return []
    return [t] + internal_nodes(t.left) + internal_nodes(t.right)


def format_tree(t: DecompositionTree) -> str:
    """Nested text form: "(z LEFT RIGHT)", "[e]" and "[0]" for the leaves."""
    if isinstance(t, Leaf):
        return "[e]" if t.empty_edge else "[0]"
    return f"({t.z} {format_tree(t.left)} {format_tree(t.right)})"


def _tokenize_tree(text: str) -> Iterator[str]:
    token = ""
    for ch in text:
        if ch in "()" or ch.isspace():
            if token:
                yield token
                token = ""
            if ch in "()":
                yield ch
        else:
            token += ch
    if token:
        yield token


def parse_tree(text: str) -> DecompositionTree:
    """Parse the nested text form back into a tree."""
    tokens = list(_tokenize_tree(text))
    pos = 0

    def parse() -> DecompositionTree:
        nonlocal pos
        if pos >= len(tokens):
            raise ParseError("unexpected end of tree text", 1)
        tok = tokens[pos]
        pos += 1
        if tok == "[0]":
            return Leaf(empty_edge=False)
        if tok == "[e]":
            return Leaf(empty_edge=True)
        if tok != "(":
            raise ParseError(f"unexpected token {tok!r} in tree text", 1)
        if pos >= len(tokens) or tokens[pos] in "()":
            raise ParseError("expected a vertex label after '('", 1)
        z = tokens[pos]
        pos += 1
        left = parse()
        right = parse()
        if pos >= len(tokens) or tokens[pos] != ")":
            raise ParseError("expected ')' in tree text", 1)
        pos += 1
        return Node(z, left, right)

    tree = parse()
    if pos != len(tokens):
        raise ParseError("trailing tokens after tree text", 1)
    return tree

"""Set-system value types and the basic predicates on them.

A hypergraph is an ordered vertex list plus an ordered tuple of distinct
hyperedges.  Each hyperedge is stored as a bitmask over vertex positions, so
the vertex list order doubles as the column order of the incidence matrix and
pairwise set algebra is a couple of integer operations.  The two vertex-free
hypergraphs, ``(V=(), E=())`` and ``(V=(), E=({},))``, are distinct
first-class values; both occur as base cases of the gluing decomposition.

All values are immutable after construction and every operation here is a
pure function.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from .errors import (
    DuplicateEdge,
    DuplicateVertex,
    InvalidLabel,
    LoopEdge,
    NotSperner,
    SizeCapExceeded,
    UnknownVertex,
)

VertexId = str


def check_label(label: object) -> None:
    """Reject labels that are empty or contain whitespace or '#'.

    The '#' exclusion keeps labels representable in the HG/GR text formats,
    where '#' starts a comment.
    """
    if (
        not isinstance(label, str)
        or not label
        or any(c.isspace() for c in label)
        or "#" in label
    ):
        raise InvalidLabel(
            f"bad vertex label {label!r}: labels are non-empty tokens "
            "without whitespace or '#'"
        )


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Hypergraph:
    """An ordered vertex list plus a family of distinct hyperedges.

    ``edges[i]`` is a bitmask: bit ``j`` set means ``vertices[j]`` belongs to
    the i-th hyperedge.  Edge order is preserved (it is the row order of the
    incidence matrix) but edge identity is set-like: duplicates are rejected,
    not merged.  Use :func:`make_hypergraph` to build one from label sets.
    """

    vertices: tuple[VertexId, ...] = ()
    edges: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(int(e) for e in self.edges))
        seen: set[str] = set()
        for v in self.vertices:
            check_label(v)
            if v in seen:
                raise DuplicateVertex(f"vertex {v!r} listed twice")
            seen.add(v)
        full = (1 << len(self.vertices)) - 1
        emasks: set[int] = set()
        for e in self.edges:
            if e < 0 or e & ~full:
                raise UnknownVertex(
                    f"edge mask {e:#b} lies outside the {len(self.vertices)}-vertex range"
                )
            if e in emasks:
                raise DuplicateEdge(f"edge {sorted(self.labels_of(e))} given twice")
            emasks.add(e)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.vertices)) - 1

    def index(self) -> dict[VertexId, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    def mask_of(self, labels: Iterable[VertexId]) -> int:
        idx = self.index()
        mask = 0
        for lbl in labels:
            j = idx.get(lbl)
            if j is None:
                raise UnknownVertex(f"unknown vertex {lbl!r}")
            mask |= 1 << j
        return mask

    def labels_of(self, mask: int) -> tuple[VertexId, ...]:
        return tuple(self.vertices[j] for j in iter_bits(mask))

    def edge_sets(self) -> tuple[frozenset[VertexId], ...]:
        return tuple(frozenset(self.labels_of(e)) for e in self.edges)

    def same_unordered(self, other: "Hypergraph") -> bool:
        """Equality as a labelled hypergraph, ignoring vertex and edge order."""
        return set(self.vertices) == set(other.vertices) and set(
            self.edge_sets()
        ) == set(other.edge_sets())

    def relabeled(self, mapping: dict[VertexId, VertexId]) -> "Hypergraph":
        return Hypergraph(tuple(mapping[v] for v in self.vertices), self.edges)


def make_hypergraph(
    vertices: Iterable[VertexId], edges: Iterable[Iterable[VertexId]] = ()
) -> Hypergraph:
    """Validated constructor from vertex labels and edges as label collections.

    Raises UnknownVertex, DuplicateVertex, DuplicateEdge or InvalidLabel.
    """
    vt = tuple(vertices)
    idx: dict[str, int] = {}
    for v in vt:
        check_label(v)
        if v in idx:
            raise DuplicateVertex(f"vertex {v!r} listed twice")
        idx[v] = len(idx)
    masks: list[int] = []
    seen: set[int] = set()
    for edge in edges:
        mask = 0
        for lbl in edge:
            j = idx.get(lbl)
            if j is None:
                raise UnknownVertex(f"edge mentions unknown vertex {lbl!r}")
            mask |= 1 << j
        if mask in seen:
            raise DuplicateEdge(f"edge {sorted(set(edge))} given twice")
        seen.add(mask)
        masks.append(mask)
    return Hypergraph(vt, tuple(masks))


# ---------------------------------------------------------------------------
# Predicates


def is_sperner(h: Hypergraph) -> bool:
    """True iff no hyperedge contains another (the hypergraph is a clutter)."""
    return sperner_violation(h) is None


def sperner_violation(
    h: Hypergraph,
) -> tuple[frozenset[VertexId], frozenset[VertexId]] | None:
    """A pair (smaller, larger) of edges with containment, or None."""
    es = h.edges
    for i in range(len(es)):
        for j in range(i + 1, len(es)):
            a, b = es[i], es[j]
            if a & ~b == 0:
                return frozenset(h.labels_of(a)), frozenset(h.labels_of(b))
            if b & ~a == 0:
                return frozenset(h.labels_of(b)), frozenset(h.labels_of(a))
    return None


def is_dually_sperner(h: Hypergraph) -> bool:
    """True iff every distinct edge pair e,f has min(|e-f|, |f-e|) <= 1."""
    return dually_sperner_violation(h) is None


def dually_sperner_violation(
    h: Hypergraph,
) -> tuple[frozenset[VertexId], frozenset[VertexId]] | None:
    """A pair of edges whose two difference sets both have size >= 2, or None."""
    es = h.edges
    for i in range(len(es)):
        for j in range(i + 1, len(es)):
            a, b = es[i], es[j]
            if (a & ~b).bit_count() > 1 and (b & ~a).bit_count() > 1:
                return frozenset(h.labels_of(a)), frozenset(h.labels_of(b))
    return None


def is_one_sperner(h: Hypergraph) -> bool:
    """True iff every distinct edge pair e,f has min(|e-f|, |f-e|) = 1.

    Equivalent to Sperner and dually Sperner together; checked here by a
    single pairwise scan.
    """
    es = h.edges
    for i in range(len(es)):
        for j in range(i + 1, len(es)):
            a, b = es[i], es[j]
            if min((a & ~b).bit_count(), (b & ~a).bit_count()) != 1:
                return False
    return True


def one_sperner_violation(
    h: Hypergraph,
) -> tuple[frozenset[VertexId], frozenset[VertexId]] | None:
    """An edge pair with min difference size != 1, or None."""
    v = sperner_violation(h)
    if v is not None:
        return v
    return dually_sperner_violation(h)


# ---------------------------------------------------------------------------
# Transforms


def complement(h: Hypergraph) -> Hypergraph:
    """Replace every edge e by V - e; vertex and edge order are preserved."""
    full = h.full_mask
    return Hypergraph(h.vertices, tuple(full & ~e for e in h.edges))


@dataclass(frozen=True)
class IncidenceMatrix:
    """A 0/1 matrix; row i is stored as a bitmask with bit j = entry (i, j)."""

    rows: tuple[int, ...]
    cols: int

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(int(r) for r in self.rows))
        full = (1 << self.cols) - 1
        for r in self.rows:
            if r < 0 or r & ~full:
                raise ValueError(f"row mask {r:#b} exceeds {self.cols} columns")

    @property
    def row_count(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def column(self, j: int) -> int:
        """The j-th column as a bitmask over row indices."""
        out = 0
        for i, r in enumerate(self.rows):
            out |= ((r >> j) & 1) << i
        return out

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.cols)] for r in self.rows]

    @classmethod
    def from_lists(cls, rows: Iterable[Iterable[int]], cols: int | None = None):
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        masks = []
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
            masks.append(sum(1 << j for j, x in enumerate(r) if x))
        return cls(tuple(masks), cols)


def incidence_matrix(h: Hypergraph) -> IncidenceMatrix:
    """Edge-by-vertex incidence matrix in stored edge and vertex order."""
    return IncidenceMatrix(h.edges, h.n)


def permutation_equivalent(
    a: IncidenceMatrix, b: IncidenceMatrix, cap: int = 16
) -> bool:
    """True iff ``a`` can be obtained from ``b`` by row and column permutations.

    Backtracking search over column bijections; at each depth the multiset of
    partial row patterns must match, which both prunes the search and, once
    all columns are assigned, certifies that a row bijection exists.  Refuses
    matrices with more than ``cap`` rows or columns.
    """
    if a.cols != b.cols or a.row_count != b.row_count:
        return False
    n, m = a.cols, a.row_count
    if max(n, m) > cap:
        raise SizeCapExceeded(
            f"matrix is {m}x{n}; permutation equivalence is capped at {cap}x{cap}"
        )
    if n == 0 or m == 0:
        return True
    if sorted(r.bit_count() for r in a.rows) != sorted(r.bit_count() for r in b.rows):
        return False
    acols = [a.column(j) for j in range(n)]
    bcols = [b.column(j) for j in range(n)]
    if sorted(c.bit_count() for c in acols) != sorted(c.bit_count() for c in bcols):
        return False

    # Process a's columns rarest column-sum class first to cut branching.
    freq = Counter(c.bit_count() for c in acols)
    order = sorted(range(n), key=lambda j: (freq[acols[j].bit_count()], j))

    # Partial row signatures of `a` after each prefix of processed columns.
    want: list[list[int]] = []
    sig = [0] * m
    for j in order:
        col = acols[j]
        sig = [(s << 1) | ((col >> i) & 1) for i, s in enumerate(sig)]
        want.append(sorted(sig))

    used = [False] * n

    def dfs(depth: int, bsig: list[int]) -> bool:
        if depth == n:
            return True
        target = acols[order[depth]].bit_count()
        tried: set[int] = set()
        for bj in range(n):
            col = bcols[bj]
            if used[bj] or col.bit_count() != target or col in tried:
                continue
            tried.add(col)
            nsig = [(s << 1) | ((col >> i) & 1) for i, s in enumerate(bsig)]
            if sorted(nsig) != want[depth]:
                continue
            used[bj] = True
            if dfs(depth + 1, nsig):
                return True
            used[bj] = False
        return False

    return dfs(0, [0] * m)


class VertexClasses(NamedTuple):
    universal: frozenset[VertexId]
    isolated: frozenset[VertexId]
    twin_pairs: frozenset[tuple[VertexId, VertexId]]


def vertex_classes(h: Hypergraph) -> VertexClasses:
    """Universal / isolated vertices and twin pairs, from edge membership.

    A vertex is universal if it lies in every edge and isolated if it lies in
    none (with no edges at all, both conditions hold vacuously).  Twins are
    reported as pairs, in vertex order, with identical membership columns.
    """
    full_rows = (1 << h.m) - 1
    cols = []
    for j in range(h.n):
        c = 0
        for i, e in enumerate(h.edges):
            c |= ((e >> j) & 1) << i
        cols.append(c)
    universal = frozenset(v for v, c in zip(h.vertices, cols) if c == full_rows)
    isolated = frozenset(v for v, c in zip(h.vertices, cols) if c == 0)
    groups: dict[int, list[str]] = {}
    for v, c in zip(h.vertices, cols):
        groups.setdefault(c, []).append(v)
    pairs = set()
    for members in groups.values():
        for i in range(len(members)):
            for j in range(i + 1, len(members)):
                pairs.add((members[i], members[j]))
    return VertexClasses(universal, isolated, frozenset(pairs))


def k_of(h: Hypergraph, v: VertexId) -> int | None:
    """Largest size of an edge containing v, or None if no edge contains v."""
    idx = h.index()
    if v not in idx:
        raise UnknownVertex(f"unknown vertex {v!r}")
    bit = 1 << idx[v]
    sizes = [e.bit_count() for e in h.edges if e & bit]
    return max(sizes) if sizes else None


def _max_cliques_masks(n: int, adj: list[int]) -> list[int]:
    """All maximal cliques of the graph given by adjacency bitmasks.

    Recursive enumeration with a pivot; for the vertex-free graph the single
    (empty) maximal clique is reported.
    """
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if p == 0 and x == 0:
            out.append(r)
            return
        pivot, best = -1, -1
        for u in iter_bits(p | x):
            score = (p & adj[u]).bit_count()
            if score > best:
                pivot, best = u, score
        for v in iter_bits(p & ~adj[pivot]):
            bit = 1 << v
            expand(r | bit, p & adj[v], x & adj[v])
            p &= ~bit
            x |= bit

    expand(0, (1 << n) - 1, 0)
    return out


def is_conformal(h: Hypergraph) -> bool:
    """True iff the clutter is the maximal-clique hypergraph of some graph.

    Builds the co-occurrence graph (u ~ v iff some edge contains both) and
    compares its maximal cliques with the edge set.  Rejects non-Sperner
    input: conformality is a clutter notion here.
    """
    if not is_sperner(h):
        raise NotSperner("conformality check requires a Sperner hypergraph")
    adj = [0] * h.n
    for e in h.edges:
        for i in iter_bits(e):
            adj[i] |= e & ~(1 << i)
    return set(_max_cliques_masks(h.n, adj)) == set(h.edges)


# ---------------------------------------------------------------------------
# Graphs


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph; edges are index pairs (i, j) with i < j.

    Pairs are stored sorted, so equal edge sets compare equal regardless of
    input order.  Use :func:`make_graph` to build one from label pairs.
    """

    vertices: tuple[VertexId, ...] = ()
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        seen: set[str] = set()
        for v in self.vertices:
            check_label(v)
            if v in seen:
                raise DuplicateVertex(f"vertex {v!r} listed twice")
            seen.add(v)
        n = len(self.vertices)
        norm = []
        pair_seen: set[tuple[int, int]] = set()
        for i, j in self.edges:
            if not (0 <= i < n and 0 <= j < n):
                raise UnknownVertex(f"edge index pair ({i}, {j}) out of range")
            if i == j:
                raise LoopEdge(f"loop at vertex {self.vertices[i]!r}")
            if i > j:
                i, j = j, i
            if (i, j) in pair_seen:
                raise DuplicateEdge(
                    f"edge {{{self.vertices[i]}, {self.vertices[j]}}} given twice"
                )
            pair_seen.add((i, j))
            norm.append((i, j))
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    @property
    def n(self) -> int:
        return len(self.vertices)

    def index(self) -> dict[VertexId, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    def adjacency(self) -> list[int]:
        adj = [0] * self.n
        for i, j in self.edges:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return adj

    def edge_label_pairs(self) -> tuple[tuple[VertexId, VertexId], ...]:
        return tuple((self.vertices[i], self.vertices[j]) for i, j in self.edges)

    def has_edge(self, u: VertexId, v: VertexId) -> bool:
        idx = self.index()
        i, j = idx[u], idx[v]
        if i > j:
            i, j = j, i
        return (i, j) in set(self.edges)


def make_graph(
    vertices: Iterable[VertexId], edges: Iterable[tuple[VertexId, VertexId]] = ()
) -> Graph:
    """Validated constructor from vertex labels and label pairs."""
    vt = tuple(vertices)
    idx: dict[str, int] = {}
    for v in vt:
        check_label(v)
        if v in idx:
            raise DuplicateVertex(f"vertex {v!r} listed twice")
        idx[v] = len(idx)
    pairs = []
    for u, w in edges:
        if u not in idx:
            raise UnknownVertex(f"edge mentions unknown vertex {u!r}")
        if w not in idx:
            raise UnknownVertex(f"edge mentions unknown vertex {w!r}")
        pairs.append((idx[u], idx[w]))
    return Graph(vt, tuple(pairs))

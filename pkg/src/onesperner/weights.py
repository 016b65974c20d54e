"""Constructive weight synthesis for 1-Sperner hypergraphs.

One recursion over the decomposition tree produces a pair (w, t) of strictly
positive integer vertex weights and a non-negative integer threshold that is
simultaneously a *nice threshold separator* (w(X) >= t iff X contains an
edge, with w(V) = t only for E = {V} and t = 0 only for E = {{}}) and an
*equalizing* assignment (w(X) = t iff X is an edge).  Given factor solutions
(w1, t1) and (w2, t2) and the scale M = w2(V2) + 1, the combined assignment
is

    w(x) = M * w1(x) on V1,    w(x) = w2(x) on V2,
    w(z) = M * (w1(V1) - t1) + t2,        t = M * w1(V1) + t2,

with base thresholds t = 1 for the edge-free and t = 0 for the
empty-edge vertex-free hypergraph.  M compounds multiplicatively along the
tree, so weights grow exponentially with decomposition depth; Python
integers absorb that, and the exhaustive verifiers fall back from the
vectorized int64 path to big integers when sums could overflow.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

import numpy as np

from .core import Hypergraph, VertexId, is_one_sperner
from .decomp import Leaf, Node, decompose_fully
from .errors import CapExceeded, DegenerateEdgeSet, NotOneSperner, UnknownVertex


@dataclass(frozen=True)
class WeightAssignment:
    """Strictly positive integer vertex weights plus an integer threshold >= 0."""

    weights: dict[VertexId, int]
    threshold: int

    def __post_init__(self):
        for v, w in self.weights.items():
            if not isinstance(w, int) or isinstance(w, bool) or w <= 0:
                raise ValueError(f"weight of {v!r} must be a positive integer, got {w!r}")
        t = self.threshold
        if not isinstance(t, int) or isinstance(t, bool) or t < 0:
            raise ValueError(f"threshold must be a non-negative integer, got {t!r}")

    @property
    def total(self) -> int:
        return sum(self.weights.values())


@dataclass(frozen=True)
class RationalVector:
    """Exact non-negative rationals indexed by vertex."""

    entries: dict[VertexId, Fraction]

    def __post_init__(self):
        for v, x in self.entries.items():
            if x < 0:
                raise ValueError(f"entry for {v!r} is negative")


def _synthesize(h: Hypergraph) -> WeightAssignment:
    tree = decompose_fully(h)

    def rec(t) -> tuple[dict[VertexId, int], int, bool]:
        """Weights, threshold and an edge-presence flag for a subtree."""
        if isinstance(t, Leaf):
            return {}, 0 if t.empty_edge else 1, t.empty_edge
        assert isinstance(t, Node)
        w1, t1, has1 = rec(t.left)
        w2, t2, has2 = rec(t.right)
        if not has1:
            # The gluing vertex is isolated (the left factor is the edge-free
            # vertex-free hypergraph, so w1(V1) >= t1 fails and the generic
            # rule below would assign z a non-positive weight).  Doubling the
            # right factor and giving z weight 1 keeps every z-containing
            # subset sum odd, away from the even threshold, which preserves
            # the separator, niceness and equalizing properties exactly.
            if w1:
                raise AssertionError("internal: edge-free factor with vertices")
            w = {v: 2 * val for v, val in w2.items()}
            w[t.z] = 1
            return w, 2 * t2, has2
        s1 = sum(w1.values())
        scale = sum(w2.values()) + 1
        w = {v: scale * val for v, val in w1.items()}
        w.update(w2)
        w[t.z] = scale * (s1 - t1) + t2
        return w, scale * s1 + t2, True

    w, t, _ = rec(tree)
    return WeightAssignment({v: w[v] for v in h.vertices}, t)


def threshold_separator(h: Hypergraph) -> WeightAssignment:
    """Nice threshold separator of a 1-Sperner hypergraph.

    Satisfies w(X) >= t iff X contains an edge, plus the two niceness
    clauses: w(V) = t forces E = {V}, and t = 0 forces E = {{}}.
    """
    return _synthesize(h)


def equalizing_weights(h: Hypergraph) -> WeightAssignment:
    """Weights with w(X) = t exactly for the hyperedges X.

    The same recursion as :func:`threshold_separator` delivers both
    properties, so the two functions return identical assignments; they are
    exposed separately because they certify different contracts.
    """
    return _synthesize(h)


def _subset_tables(h: Hypergraph, weights: Mapping[VertexId, int], threshold: int):
    """Per-vertex weight list plus a guard for the vectorized int64 path."""
    missing = [v for v in h.vertices if v not in weights]
    if missing:
        raise UnknownVertex(f"weights missing for vertices {missing}")
    extra = set(weights) - set(h.vertices)
    if extra:
        raise UnknownVertex(f"weights given for unknown vertices {sorted(extra)}")
    wlist = [weights[v] for v in h.vertices]
    fits = sum(abs(w) for w in wlist) + abs(threshold) < 2**62
    return wlist, fits


def _sums_and_dependent(h: Hypergraph, wlist: list[int]):
    """Vectorized subset sums and dependency flags over all 2**n subsets."""
    idx = np.arange(1 << h.n, dtype=np.int64)
    dep = np.zeros(1 << h.n, dtype=bool)
    for e in h.edges:
        dep |= (idx & e) == e
    sums = np.zeros(1, dtype=np.int64)
    for w in wlist:
        sums = np.concatenate([sums, sums + w])
    return sums, dep


def threshold_property_violation(
    h: Hypergraph,
    weights: Mapping[VertexId, int],
    threshold: int,
    cap: int = 24,
) -> frozenset[VertexId] | None:
    """First subset X (in bitmask order) where w(X) >= t disagrees with
    "X contains an edge", or None.  Exhaustive over all 2**n subsets."""
    if h.n > cap:
        raise CapExceeded(f"{h.n} vertices exceed the exhaustive-check cap of {cap}")
    wlist, fits = _subset_tables(h, weights, threshold)
    if fits:
        sums, dep = _sums_and_dependent(h, wlist)
        bad = np.nonzero((sums >= threshold) != dep)[0]
        if bad.size:
            return frozenset(h.labels_of(int(bad[0])))
        return None
    for mask in range(1 << h.n):
        total = sum(wlist[j] for j in range(h.n) if mask >> j & 1)
        dep = any(mask & e == e for e in h.edges)
        if (total >= threshold) != dep:
            return frozenset(h.labels_of(mask))
    return None


def verify_threshold_separator(
    h: Hypergraph, wa: WeightAssignment, cap: int = 24
) -> bool:
    """Exhaustively check the separator property plus both niceness clauses."""
    if threshold_property_violation(h, wa.weights, wa.threshold, cap) is not None:
        return False
    if wa.total == wa.threshold and set(h.edges) != {h.full_mask}:
        return False
    if wa.threshold == 0 and h.edges != (0,):
        return False
    return True


def equalizing_violation(
    h: Hypergraph,
    weights: Mapping[VertexId, int],
    threshold: int,
    cap: int = 24,
) -> frozenset[VertexId] | None:
    """First subset where w(X) = t disagrees with edge membership, or None."""
    if h.n > cap:
        raise CapExceeded(f"{h.n} vertices exceed the exhaustive-check cap of {cap}")
    wlist, fits = _subset_tables(h, weights, threshold)
    if fits:
        idx = np.arange(1 << h.n, dtype=np.int64)
        member = np.zeros(1 << h.n, dtype=bool)
        if h.edges:
            member[list(h.edges)] = True
        sums = np.zeros(1, dtype=np.int64)
        for w in wlist:
            sums = np.concatenate([sums, sums + w])
        bad = np.nonzero((sums == threshold) != member)[0]
        if bad.size:
            return frozenset(h.labels_of(int(bad[0])))
        return None
    edge_set = set(h.edges)
    for mask in range(1 << h.n):
        total = sum(wlist[j] for j in range(h.n) if mask >> j & 1)
        if (total == threshold) != (mask in edge_set):
            return frozenset(h.labels_of(mask))
    return None


def verify_equalizing(h: Hypergraph, wa: WeightAssignment, cap: int = 24) -> bool:
    """Exhaustively check w(X) = t iff X is a hyperedge."""
    return equalizing_violation(h, wa.weights, wa.threshold, cap) is None


def normalized_vector(h: Hypergraph) -> RationalVector:
    """The vector x with x_v = w(v)/t from the equalizing weights.

    For a 1-Sperner hypergraph whose edge set is neither empty nor {{}},
    the incidence matrix applied to x gives the all-ones vector, and the
    entries sum to at least 1.  Both facts hold exactly in rational
    arithmetic and are re-checked here.
    """
    if not is_one_sperner(h):
        raise NotOneSperner("normalized vector requires a 1-Sperner hypergraph")
    if not h.edges or h.edges == (0,):
        raise DegenerateEdgeSet("edge set must be neither empty nor {{}}")
    wa = _synthesize(h)
    t = wa.threshold
    x = {v: Fraction(wa.weights[v], t) for v in h.vertices}
    for e in h.edges:
        if sum(x[v] for v in h.labels_of(e)) != 1:
            raise AssertionError("internal: row sum of normalized vector is not 1")
    if sum(x.values()) < 1:
        raise AssertionError("internal: normalized vector sums below 1")
    return RationalVector(x)


def char_rank(h: Hypergraph) -> int:
    """Rank over the rationals of the incidence matrix, by exact elimination."""
    n = h.n
    rows = [[Fraction((e >> j) & 1) for j in range(n)] for e in h.edges]
    rank = 0
    for col in range(n):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        prow = rows[rank]
        inv = 1 / prow[col]
        rows[rank] = prow = [x * inv for x in prow]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], prow)]
        rank += 1
        if rank == len(rows):
            break
    return rank

"""Graph-side constructions: maximal cliques and threshold-graph checks.

A graph is threshold exactly when no four vertices induce a path, a cycle or
a pair of disjoint edges, equivalently when the vertices split into a clique
plus an independent set whose neighbourhoods form a chain.  Those two
classical characterizations are implemented directly; the hypergraph-side
equivalents (the clique hypergraph being 1-Sperner, threshold, or
2-asummable) are computed through the core predicates and the oracles, and
``threshold_equivalence_report`` returns all four verdicts side by side.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

from .core import (
    Graph,
    Hypergraph,
    VertexId,
    _max_cliques_masks,
    is_one_sperner,
    iter_bits,
)
from .oracle import (
    AsummabilityWitness,
    ThresholdCertificate,
    ThresholdRefusal,
    is_k_asummable,
    is_threshold,
)


def maximal_cliques(g: Graph) -> list[frozenset[VertexId]]:
    """All inclusion-maximal cliques, lexicographic by sorted member indices."""
    masks = _max_cliques_masks(g.n, g.adjacency())
    masks.sort(key=lambda m: tuple(iter_bits(m)))
    return [frozenset(g.vertices[j] for j in iter_bits(m)) for m in masks]


def clique_hypergraph(g: Graph) -> Hypergraph:
    """The hypergraph on V(G) whose edges are the maximal cliques of G."""
    masks = _max_cliques_masks(g.n, g.adjacency())
    masks.sort(key=lambda m: tuple(iter_bits(m)))
    return Hypergraph(g.vertices, tuple(masks))


def complement_graph(g: Graph) -> Graph:
    """The graph joining exactly the non-adjacent vertex pairs."""
    present = set(g.edges)
    pairs = tuple(
        (i, j)
        for i in range(g.n)
        for j in range(i + 1, g.n)
        if (i, j) not in present
    )
    return Graph(g.vertices, pairs)


def stable_set_hypergraph(g: Graph) -> Hypergraph:
    """The hypergraph whose edges are the maximal stable sets of G."""
    return clique_hypergraph(complement_graph(g))


def is_threshold_graph_forbidden(
    g: Graph,
) -> tuple[bool, frozenset[VertexId] | None]:
    """Threshold test by scanning 4-vertex subsets for a forbidden pattern.

    A 4-set induces a path, a 4-cycle or two disjoint edges exactly when it
    carries two disjoint edges {a,b}, {c,d} with both {a,c} and {b,d}
    missing.  Returns (False, witness subset) on the first hit.
    """
    adj = g.adjacency()

    def edge(i: int, j: int) -> bool:
        return bool(adj[i] >> j & 1)

    for quad in combinations(range(g.n), 4):
        for a, b, c, d in _pairings(quad):
            if edge(a, b) and edge(c, d) and not edge(a, c) and not edge(b, d):
                return False, frozenset(g.vertices[i] for i in quad)
    return True, None


def _pairings(quad):
    p, q, r, s = quad
    for (a, b), (c, d) in (((p, q), (r, s)), ((p, r), (q, s)), ((p, s), (q, r))):
        yield a, b, c, d
        yield a, b, d, c


class SplitOrdering(NamedTuple):
    """A clique/independent partition with the independent side ordered so
    that each vertex's neighbourhood contains the previous one's."""

    clique: frozenset[VertexId]
    independent_order: tuple[VertexId, ...]


def is_threshold_graph_ordering(
    g: Graph,
) -> tuple[bool, SplitOrdering | None]:
    """Threshold test by split partition plus nested neighbourhoods.

    Backtracks over clique/independent assignments (low-degree vertices are
    offered the independent side first), and for each full partition tries to
    order the independent side by neighbourhood inclusion.  Exact for all
    inputs; intended for small n.
    """
    adj = g.adjacency()
    order = sorted(range(g.n), key=lambda i: (adj[i].bit_count(), i))

    def attempt(kmask: int, imask: int) -> SplitOrdering | None:
        ivs = sorted(iter_bits(imask), key=lambda i: (adj[i].bit_count(), i))
        for prev, cur in zip(ivs, ivs[1:]):
            if adj[prev] & ~adj[cur]:
                return None
        return SplitOrdering(
            frozenset(g.vertices[i] for i in iter_bits(kmask)),
            tuple(g.vertices[i] for i in ivs),
        )

    def search(pos: int, kmask: int, imask: int) -> SplitOrdering | None:
        if pos == g.n:
            return attempt(kmask, imask)
        v = order[pos]
        bit = 1 << v
        if imask & adj[v] == 0:
            got = search(pos + 1, kmask, imask | bit)
            if got is not None:
                return got
        if kmask & ~adj[v] == 0:
            got = search(pos + 1, kmask | bit, imask)
            if got is not None:
                return got
        return None

    witness = search(0, 0, 0)
    return (witness is not None), witness


@dataclass(frozen=True)
class ThresholdEquivalenceReport:
    """The four equivalent verdicts for a graph, with witnesses.

    graph_threshold comes from the forbidden-subset scan, the other three
    are properties of the clique hypergraph: 1-Spernerness, thresholdness
    (exact LP oracle) and 2-asummability (complete search oracle).
    """

    graph_threshold: bool
    clique_one_sperner: bool
    clique_threshold: bool
    clique_two_asummable: bool
    forbidden_witness: frozenset[VertexId] | None
    threshold_outcome: ThresholdCertificate | ThresholdRefusal
    asummability_witness: AsummabilityWitness | None

    def flags(self) -> tuple[bool, bool, bool, bool]:
        return (
            self.graph_threshold,
            self.clique_one_sperner,
            self.clique_threshold,
            self.clique_two_asummable,
        )


def threshold_equivalence_report(
    g: Graph, threshold_cap: int = 16, asummable_cap: int = 12
) -> ThresholdEquivalenceReport:
    """Evaluate all four threshold characterizations on one graph.

    Raises CapExceeded when the graph is too large for the oracle-backed
    verdicts (the LP-based one and the asummability search).
    """
    ok, quad = is_threshold_graph_forbidden(g)
    ch = clique_hypergraph(g)
    one_sperner = is_one_sperner(ch)
    outcome = is_threshold(ch, cap=threshold_cap)
    summable = is_k_asummable(ch, 2, cap=asummable_cap)
    return ThresholdEquivalenceReport(
        graph_threshold=ok,
        clique_one_sperner=one_sperner,
        clique_threshold=isinstance(outcome, ThresholdCertificate),
        clique_two_asummable=summable is True,
        forbidden_witness=quad,
        threshold_outcome=outcome,
        asummability_witness=None if summable is True else summable,
    )

"""Independent brute-force and exact-LP oracles.

These validate the constructive modules from the outside: thresholdness is
decided by exact rational feasibility of the finite system

    w(e) >= t      for every minimal hyperedge e,
    w(S) <= t - 1  for every maximal independent set S,
    w >= 0,  t >= 1 whenever some minimal hyperedge is non-empty,

which matches the integer definition because any rational solution scales by
the least common denominator c >= 1 into integers (c*(t-1) <= c*t - 1).
k-asummability is a complete search for equal characteristic-vector sums of
k independent and k dependent sets, and small-n Sperner enumeration streams
every antichain over a labelled vertex set.  Everything here runs in exact
arithmetic; inputs larger than a cap are refused, never sampled.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Iterable, Iterator, Union

from ._exactlp import feasible_point_or_conflict
from .core import Hypergraph, VertexId, iter_bits
from .errors import CapExceeded

DEFAULT_THRESHOLD_CAP = 16
DEFAULT_INDEPENDENT_CAP = 20
DEFAULT_ENUMERATION_CAP = 5


def is_independent(h: Hypergraph, members: Iterable[VertexId]) -> bool:
    """True iff the vertex set contains no hyperedge."""
    mask = h.mask_of(members)
    return all(mask & e != e for e in h.edges)


def _maximal_independent_masks(h: Hypergraph) -> list[int]:
    n = h.n
    size = 1 << n
    dependent = bytearray(size)
    for e in h.edges:
        if e == 0:
            return []
        for mask in range(size):
            if mask & e == e:
                dependent[mask] = 1
    out = []
    for mask in range(size):
        if dependent[mask]:
            continue
        if all(mask >> j & 1 or dependent[mask | (1 << j)] for j in range(n)):
            out.append(mask)
    return out


def maximal_independent_sets(
    h: Hypergraph, cap: int = DEFAULT_INDEPENDENT_CAP
) -> list[frozenset[VertexId]]:
    """All inclusion-maximal independent sets, in ascending bitmask order."""
    if h.n > cap:
        raise CapExceeded(f"{h.n} vertices exceed the enumeration cap of {cap}")
    return [frozenset(h.labels_of(m)) for m in _maximal_independent_masks(h)]


def _minimal_edge_masks(h: Hypergraph) -> list[int]:
    out = []
    for e in h.edges:
        if not any(f != e and f & ~e == 0 for f in h.edges):
            out.append(e)
    return out


@dataclass(frozen=True)
class Constraint:
    """One row of the thresholdness system.

    kind "edge": w(members) >= t;  kind "independent": w(members) <= t - 1;
    kind "floor": t >= 1.
    """

    kind: str
    members: frozenset[VertexId] = frozenset()

    def __str__(self) -> str:
        names = ",".join(sorted(self.members))
        if self.kind == "edge":
            return f"w({{{names}}}) >= t"
        if self.kind == "independent":
            return f"w({{{names}}}) <= t - 1"
        return "t >= 1"


@dataclass(frozen=True)
class ThresholdCertificate:
    """Non-negative rational weights and threshold witnessing thresholdness."""

    weights: dict[VertexId, Fraction]
    threshold: Fraction

    def __post_init__(self):
        for v, w in self.weights.items():
            if w < 0:
                raise ValueError(f"certificate weight of {v!r} is negative")
        if self.threshold < 0:
            raise ValueError("certificate threshold is negative")

    def scaled(self) -> tuple[dict[VertexId, int], int]:
        """Integer weights and threshold, multiplied by the common denominator."""
        c = math.lcm(
            self.threshold.denominator,
            *(w.denominator for w in self.weights.values()),
        )
        return (
            {v: int(w * c) for v, w in self.weights.items()},
            int(self.threshold * c),
        )


def _constraint_row(c: Constraint, index: dict[VertexId, int], nvars: int):
    row = [0] * nvars
    t_col = nvars - 1
    if c.kind == "edge":
        for v in c.members:
            row[index[v]] = 1
        row[t_col] = -1
        return row, 0
    if c.kind == "independent":
        for v in c.members:
            row[index[v]] = -1
        row[t_col] = 1
        return row, 1
    row[t_col] = 1
    return row, 1


def _system_feasible(
    vertices: tuple[VertexId, ...], constraints: Iterable[Constraint]
):
    constraints = list(constraints)
    index = {v: i for i, v in enumerate(vertices)}
    nvars = len(vertices) + 1
    rows, rhs = [], []
    for c in constraints:
        row, b = _constraint_row(c, index, nvars)
        rows.append(row)
        rhs.append(b)
    return feasible_point_or_conflict(rows, rhs, nvars)


@dataclass(frozen=True)
class ThresholdRefusal:
    """A verified infeasible subset of the thresholdness system."""

    vertices: tuple[VertexId, ...]
    constraints: tuple[Constraint, ...]

    def minimized(self) -> "ThresholdRefusal":
        """Shrink to an irreducible infeasible subsystem by deletion filtering."""
        remaining = list(self.constraints)
        i = 0
        while i < len(remaining):
            trial = remaining[:i] + remaining[i + 1 :]
            status, _ = _system_feasible(self.vertices, trial)
            if status == "conflict":
                remaining = trial
            else:
                i += 1
        return ThresholdRefusal(self.vertices, tuple(remaining))

    def __str__(self) -> str:
        inner = "; ".join(str(c) for c in self.constraints)
        return f"infeasible constraint subset: {inner}"


def is_threshold(
    h: Hypergraph, cap: int = DEFAULT_THRESHOLD_CAP
) -> Union[ThresholdCertificate, ThresholdRefusal]:
    """Decide thresholdness by exact rational feasibility.

    Returns a certificate with rational weights on success and a refusal
    carrying a verified infeasible constraint subset otherwise.  The two
    degenerate edge sets are handled directly: with no edges any threshold
    above the total weight works, and with the empty edge present t = 0 does.
    """
    if h.n > cap:
        raise CapExceeded(f"{h.n} vertices exceed the thresholdness cap of {cap}")
    zero = Fraction(0)
    minimal = _minimal_edge_masks(h)
    if not minimal:
        return ThresholdCertificate({v: zero for v in h.vertices}, Fraction(1))
    if 0 in minimal:
        return ThresholdCertificate({v: zero for v in h.vertices}, zero)
    constraints = [
        Constraint("edge", frozenset(h.labels_of(e))) for e in minimal
    ]
    constraints += [
        Constraint("independent", frozenset(h.labels_of(s)))
        for s in _maximal_independent_masks(h)
    ]
    constraints.append(Constraint("floor"))
    status, payload = _system_feasible(h.vertices, constraints)
    if status == "point":
        values = payload
        return ThresholdCertificate(
            {v: values[i] for i, v in enumerate(h.vertices)}, values[-1]
        )
    return ThresholdRefusal(
        h.vertices, tuple(constraints[i] for i in payload)
    )


@dataclass(frozen=True)
class AsummabilityWitness:
    """k independent and k dependent sets with equal characteristic-vector sums."""

    independent_sets: tuple[frozenset[VertexId], ...]
    dependent_sets: tuple[frozenset[VertexId], ...]

    @property
    def k(self) -> int:
        return len(self.independent_sets)


def _default_asummability_cap(k: int) -> int:
    if k == 2:
        return 12
    if k == 3:
        return 7
    return 5


def _validate_witness(h: Hypergraph, w: AsummabilityWitness) -> AsummabilityWitness:
    counts_a = [0] * h.n
    counts_b = [0] * h.n
    idx = h.index()
    for s in w.independent_sets:
        if not is_independent(h, s):
            raise AssertionError("internal: witness set is not independent")
        for v in s:
            counts_a[idx[v]] += 1
    for s in w.dependent_sets:
        if is_independent(h, s):
            raise AssertionError("internal: witness set is not dependent")
        for v in s:
            counts_b[idx[v]] += 1
    if counts_a != counts_b:
        raise AssertionError("internal: witness vector sums differ")
    return w


def _two_summability_witness(h: Hypergraph) -> AsummabilityWitness | None:
    """Complete search for a 2-summability witness.

    Any witness can be normalized so the dependent pair is a pair of edges
    (e1, e2) and the independent pair splits e1 ^ e2 on top of the shared
    part e1 & e2: shrinking the four sets into e1 | e2 and trimming the
    overlap preserves independence and the vector-sum equality.  So it is
    enough to scan edge pairs and two-colour the symmetric difference such
    that neither colour class completes an edge.
    """
    edges = h.edges
    for a in range(len(edges)):
        for b in range(a, len(edges)):
            e1, e2 = edges[a], edges[b]
            shared = e1 & e2
            diff = e1 ^ e2
            blockers = []
            hopeless = False
            for g in edges:
                if g & ~(shared | diff):
                    continue
                gd = g & ~shared
                if gd == 0 or gd.bit_count() == 1:
                    # gd empty: the shared part is already dependent.
                    # singleton: the element can sit on neither side.
                    hopeless = True
                    break
                blockers.append(gd)
            if hopeless:
                continue
            elements = list(iter_bits(diff))
            if not elements:
                continue

            def colour(pos: int, left: int, right: int) -> int | None:
                if any(f & ~left == 0 or f & ~right == 0 for f in blockers):
                    return None
                if pos == len(elements):
                    return left
                bit = 1 << elements[pos]
                got = colour(pos + 1, left | bit, right)
                if got is not None:
                    return got
                return colour(pos + 1, left, right | bit)

            # Fix the first element's side; swapping sides gives the same witness.
            first = 1 << elements[0]
            z = colour(1, first, 0)
            if z is None:
                continue
            a1 = shared | z
            a2 = shared | (diff & ~z)
            witness = AsummabilityWitness(
                (frozenset(h.labels_of(a1)), frozenset(h.labels_of(a2))),
                (frozenset(h.labels_of(e1)), frozenset(h.labels_of(e2))),
            )
            return _validate_witness(h, witness)
    return None


def _k_summability_witness(h: Hypergraph, k: int) -> AsummabilityWitness | None:
    """Meet-in-the-middle over k-multisets of independent and dependent sets."""
    n = h.n
    size = 1 << n
    dependent = [any(m & e == e for e in h.edges) for m in range(size)]
    ind = [m for m in range(size) if not dependent[m]]
    dep = [m for m in range(size) if dependent[m]]
    if not ind or not dep:
        return None
    base = k + 1
    packed = [0] * size
    for m in range(size):
        acc = 0
        for j in iter_bits(m):
            acc += base**j
        packed[m] = acc
    ind_sums: dict[int, tuple[int, ...]] = {}
    for combo in combinations_with_replacement(ind, k):
        key = sum(packed[m] for m in combo)
        ind_sums.setdefault(key, combo)
    for combo in combinations_with_replacement(dep, k):
        key = sum(packed[m] for m in combo)
        match = ind_sums.get(key)
        if match is not None:
            witness = AsummabilityWitness(
                tuple(frozenset(h.labels_of(m)) for m in match),
                tuple(frozenset(h.labels_of(m)) for m in combo),
            )
            return _validate_witness(h, witness)
    return None


def is_k_asummable(
    h: Hypergraph, k: int, cap: int | None = None
) -> Union[bool, AsummabilityWitness]:
    """True when no k independent and k dependent sets share a vector sum.

    Returns a validated witness otherwise.  Sets may repeat within a side,
    per the definition.  The k = 2 case runs the reduced complete search of
    :func:`_two_summability_witness`; larger k use meet-in-the-middle under
    tighter default caps.
    """
    if k < 2:
        raise ValueError("asummability is defined for k >= 2")
    if cap is None:
        cap = _default_asummability_cap(k)
    if h.n > cap:
        raise CapExceeded(f"{h.n} vertices exceed the asummability cap of {cap}")
    witness = (
        _two_summability_witness(h) if k == 2 else _k_summability_witness(h, k)
    )
    return True if witness is None else witness


def enumerate_sperner(
    n: int, cap: int = DEFAULT_ENUMERATION_CAP
) -> Iterator[Hypergraph]:
    """Stream every antichain over vertices v1..vn, each exactly once.

    Includes the edge-free hypergraph and the one whose single edge is
    empty.  Edges appear in ascending bitmask order; the stream is ordered
    by recursive inclusion of the smallest eligible mask.
    """
    if n > cap:
        raise CapExceeded(f"{n} exceeds the enumeration cap of {cap}")
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    vertices = tuple(f"v{i}" for i in range(1, n + 1))
    subsets = list(range(1 << n))

    def rec(start: int, chosen: tuple[int, ...]) -> Iterator[Hypergraph]:
        yield Hypergraph(vertices, chosen)
        for i in range(start, len(subsets)):
            s = subsets[i]
            if all(s & ~c and c & ~s for c in chosen):
                yield from rec(i + 1, chosen + (s,))

    return rec(0, ())

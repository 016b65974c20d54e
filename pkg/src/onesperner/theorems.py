"""Executable sweep over the library's structural guarantees.

Each check here exercises one proved property on an exhaustively enumerated
or seeded-random population and reports pass/fail with a small detail
string.  The CLI command ``verify-theorems`` prints the resulting table; the
test suite runs the same properties at larger scale.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .core import (
    Graph,
    Hypergraph,
    complement,
    incidence_matrix,
    is_dually_sperner,
    is_one_sperner,
    is_sperner,
    iter_bits,
    permutation_equivalent,
    vertex_classes,
)
from .decomp import (
    decompose_fully,
    find_decomposition_vertex,
    glue,
    internal_nodes,
    is_safe,
    is_z_decomposable,
    rebuild,
    split_at,
    uniform_core,
)
from .gen import antistar, extremal_family, random_one_sperner, star
from .graphs import (
    clique_hypergraph,
    is_threshold_graph_forbidden,
    is_threshold_graph_ordering,
    maximal_cliques,
    stable_set_hypergraph,
    threshold_equivalence_report,
)
from .oracle import enumerate_sperner, is_independent, is_k_asummable
from .weights import (
    char_rank,
    equalizing_weights,
    normalized_vector,
    threshold_separator,
    verify_equalizing,
    verify_threshold_separator,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _enumerated(cap: int) -> list[Hypergraph]:
    out: list[Hypergraph] = []
    for n in range(cap + 1):
        out.extend(enumerate_sperner(n))
    return out


def _enumerated_one_sperner(cap: int) -> list[Hypergraph]:
    return [h for h in _enumerated(cap) if is_one_sperner(h)]


def _random_instances(count: int, max_n: int, seed: int) -> list[Hypergraph]:
    return [
        random_one_sperner((seed + i) % (max_n + 1), seed=seed + i)
        for i in range(count)
    ]


def _relabel(h: Hypergraph, prefix: str) -> Hypergraph:
    return h.relabeled({v: f"{prefix}{v}" for v in h.vertices})


def all_graphs(n: int) -> list[Graph]:
    """Every labelled simple graph on n vertices."""
    vertices = tuple(f"v{i}" for i in range(1, n + 1))
    pairs = list(combinations(range(n), 2))
    out = []
    for mask in range(1 << len(pairs)):
        out.append(
            Graph(vertices, tuple(p for i, p in enumerate(pairs) if mask >> i & 1))
        )
    return out


def degree_profile(h: Hypergraph) -> tuple[dict[str, int], tuple[int, ...]]:
    degrees = {v: 0 for v in h.vertices}
    for e in h.edges:
        for v in h.labels_of(e):
            degrees[v] += 1
    return degrees, tuple(sorted(e.bit_count() for e in h.edges))


def _solve_ones_combination(h: Hypergraph) -> list[Fraction] | None:
    """Solve transpose(A) . lam = all-ones exactly; None when inconsistent."""
    n, m = h.n, h.m
    aug = [
        [Fraction((h.edges[i] >> j) & 1) for i in range(m)] + [Fraction(1)]
        for j in range(n)
    ]
    pivots: list[tuple[int, int]] = []
    row = 0
    for col in range(m):
        pr = next((r for r in range(row, n) if aug[r][col] != 0), None)
        if pr is None:
            continue
        aug[row], aug[pr] = aug[pr], aug[row]
        inv = 1 / aug[row][col]
        aug[row] = [x * inv for x in aug[row]]
        for r in range(n):
            if r != row and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[row])]
        pivots.append((row, col))
        row += 1
    for r in range(row, n):
        if aug[r][m] != 0:
            return None
    lam = [Fraction(0)] * m
    for r, c in pivots:
        lam[c] = aug[r][m]
    return lam


# ---------------------------------------------------------------------------
# Individual checks


def check_safe_gluing_closure(safe_count: int, unsafe_count: int, seed: int):
    rng = random.Random(seed)
    done = 0
    while done < safe_count:
        h1 = _relabel(random_one_sperner(rng.randrange(6), rng.randrange(10**6)), "a")
        h2 = _relabel(random_one_sperner(rng.randrange(6), rng.randrange(10**6)), "b")
        if not is_safe(h1, h2):
            continue
        if not is_one_sperner(glue(h1, h2, "z")):
            return CheckResult("safe-gluing-closure", False, "a safe gluing failed")
        done += 1
    for i in range(unsafe_count):
        k = i % 5
        labels = tuple(f"a{j}" for j in range(k))
        h1 = Hypergraph(labels, ((1 << k) - 1,))
        h2 = Hypergraph((), (0,))
        glued = glue(h1, h2, "z")
        if is_sperner(glued) or not is_dually_sperner(glued):
            return CheckResult("safe-gluing-closure", False, "an unsafe gluing misbehaved")
    return CheckResult(
        "safe-gluing-closure",
        True,
        f"{safe_count} safe gluings 1-Sperner, {unsafe_count} unsafe ones non-Sperner",
    )


def check_complement_closure(population: list[Hypergraph]):
    for h in population:
        if not is_one_sperner(complement(h)):
            return CheckResult("complement-closure", False, "complement left the class")
        if complement(complement(h)) != h:
            return CheckResult("complement-closure", False, "complement is not involutive")
    return CheckResult(
        "complement-closure", True, f"{len(population)} instances closed under complement"
    )


def check_complement_of_gluing(count: int, seed: int):
    rng = random.Random(seed)
    done = 0
    while done < count:
        h1 = _relabel(random_one_sperner(rng.randrange(5), rng.randrange(10**6)), "a")
        h2 = _relabel(random_one_sperner(rng.randrange(5), rng.randrange(10**6)), "b")
        if not is_safe(h1, h2):
            continue
        lhs = incidence_matrix(complement(glue(h1, h2, "z")))
        rhs = incidence_matrix(glue(complement(h2), complement(h1), "z"))
        if not permutation_equivalent(lhs, rhs):
            return CheckResult(
                "complement-of-gluing", False, "block identity failed"
            )
        done += 1
    return CheckResult("complement-of-gluing", True, f"{count} gluings checked")


def check_complement_decomposability(population: list[Hypergraph]):
    checked = 0
    for h in population:
        comp = complement(h)
        for z in h.vertices:
            if is_z_decomposable(h, z):
                checked += 1
                if not is_z_decomposable(comp, z):
                    return CheckResult(
                        "complement-decomposability", False, f"failed at {z!r}"
                    )
    return CheckResult(
        "complement-decomposability", True, f"{checked} split points transfer"
    )


def check_isolated_universal_decomposability(population: list[Hypergraph]):
    checked = 0
    for h in population:
        classes = vertex_classes(h)
        for z in classes.isolated | classes.universal:
            checked += 1
            if not is_z_decomposable(h, z):
                return CheckResult(
                    "isolated-universal-decomposability", False, f"failed at {z!r}"
                )
    return CheckResult(
        "isolated-universal-decomposability", True, f"{checked} vertices checked"
    )


def check_max_edge_trace(population: list[Hypergraph]):
    checked = 0
    for h in population:
        if not h.edges:
            continue
        kmax = max(e.bit_count() for e in h.edges)
        for cmask in (e for e in h.edges if e.bit_count() == kmax):
            outside = [j for j in range(h.n) if not cmask >> j & 1]
            for xi in outside:
                for yi in outside:
                    if xi == yi:
                        continue
                    for a in (e for e in h.edges if e >> xi & 1):
                        for b in (e for e in h.edges if e >> yi & 1):
                            if a.bit_count() <= b.bit_count():
                                checked += 1
                                if (a & cmask) & ~(b & cmask):
                                    return CheckResult(
                                        "max-edge-trace-ordering",
                                        False,
                                        "trace containment failed",
                                    )
    return CheckResult(
        "max-edge-trace-ordering", True, f"{checked} edge pairs ordered"
    )


def check_uniform_core(population: list[Hypergraph], seed: int):
    uniform = [
        h
        for h in population
        if h.edges and 0 not in h.edges
        and len({e.bit_count() for e in h.edges}) == 1
    ]
    rng = random.Random(seed)
    for i in range(30):
        labels = tuple(f"u{j}" for j in range(2 + i % 5))
        xs = set(labels[: rng.randrange(len(labels))])
        ys = set(labels) - xs
        if not ys:
            continue
        uniform.append(star(labels, xs, ys))
        uniform.append(antistar(labels, xs, ys))
    for h in uniform:
        r = h.edges[0].bit_count()
        kind, members = uniform_core(h)
        mask = h.mask_of(members)
        if kind == "common":
            ok = len(members) == r - 1 and all(mask & ~e == 0 for e in h.edges)
        else:
            ok = len(members) == r + 1 and all(e & ~mask == 0 for e in h.edges)
        if not ok:
            return CheckResult("uniform-core", False, "witness invalid")
    return CheckResult("uniform-core", True, f"{len(uniform)} uniform families")


def check_decomposition_existence(population: list[Hypergraph]):
    nonempty = [h for h in population if h.n > 0]
    for h in nonempty:
        if not any(is_z_decomposable(h, z) for z in h.vertices):
            return CheckResult(
                "decomposition-existence", False, "no split vertex exists"
            )
        z = find_decomposition_vertex(h)
        if not is_z_decomposable(h, z):
            return CheckResult(
                "decomposition-existence", False, "selected vertex is not valid"
            )
    return CheckResult(
        "decomposition-existence", True, f"{len(nonempty)} instances decomposable"
    )


def check_round_trip(population: list[Hypergraph], randoms: list[Hypergraph]):
    for h in population:
        tree = decompose_fully(h)
        back = rebuild(tree)
        if not permutation_equivalent(incidence_matrix(h), incidence_matrix(back)):
            return CheckResult("composition-round-trip", False, "not equivalent")
        if any(not is_safe(rebuild(nd.left), rebuild(nd.right)) for nd in internal_nodes(tree)):
            return CheckResult("composition-round-trip", False, "unsafe node in tree")
    for h in randoms:
        back = rebuild(decompose_fully(h))
        if degree_profile(h) != degree_profile(back) or not h.same_unordered(back):
            return CheckResult("composition-round-trip", False, "profiles differ")
    return CheckResult(
        "composition-round-trip",
        True,
        f"{len(population)} exact, {len(randoms)} profile round trips",
    )


def check_threshold_separator(instances: list[Hypergraph]):
    for h in instances:
        if not verify_threshold_separator(h, threshold_separator(h)):
            return CheckResult("threshold-separator-synthesis", False, "verification failed")
    return CheckResult(
        "threshold-separator-synthesis", True, f"{len(instances)} separators verified"
    )


def check_equalizing(instances: list[Hypergraph]):
    for h in instances:
        wa = equalizing_weights(h)
        if not verify_equalizing(h, wa):
            return CheckResult("equalizing-weights", False, "verification failed")
        if wa != threshold_separator(h):
            return CheckResult("equalizing-weights", False, "the two syntheses differ")
    return CheckResult("equalizing-weights", True, f"{len(instances)} assignments verified")


def check_normalized_vector(instances: list[Hypergraph]):
    eligible = [h for h in instances if h.edges and h.edges != (0,)]
    for h in eligible:
        x = normalized_vector(h).entries
        for e in h.edges:
            if sum(x[v] for v in h.labels_of(e)) != 1:
                return CheckResult("normalized-edge-vector", False, "row sum is not 1")
        if sum(x.values()) < 1:
            return CheckResult("normalized-edge-vector", False, "entries sum below 1")
    return CheckResult(
        "normalized-edge-vector", True, f"{len(eligible)} vectors exact"
    )


def check_ones_combination(instances: list[Hypergraph]):
    solved = 0
    for h in instances:
        lam = _solve_ones_combination(h)
        if lam is None:
            continue
        solved += 1
        if sum(lam) < 1:
            return CheckResult("ones-combination-bound", False, "combination sums below 1")
    return CheckResult("ones-combination-bound", True, f"{solved} systems solved")


def check_char_rank(instances: list[Hypergraph]):
    for h in instances:
        if h.edges == (0,):
            continue
        if char_rank(h) != h.m:
            return CheckResult(
                "characteristic-independence", False, "rank below edge count"
            )
    return CheckResult(
        "characteristic-independence", True, f"{len(instances)} incidence matrices"
    )


def check_edge_count_upper(instances: list[Hypergraph]):
    for h in instances:
        if h.n > 0 and h.m > h.n:
            return CheckResult("edge-count-upper-bound", False, "|E| exceeds |V|")
    return CheckResult("edge-count-upper-bound", True, f"{len(instances)} instances")


def check_edge_count_lower(enumerated_one_sperner: list[Hypergraph], kmax: int):
    checked = 0
    for h in enumerated_one_sperner:
        if h.n < 2:
            continue
        classes = vertex_classes(h)
        if classes.universal or classes.isolated or classes.twin_pairs:
            continue
        checked += 1
        if 2 * h.m < h.n + 2:
            return CheckResult("edge-count-lower-bound", False, "bound violated")
    for k in range(2, kmax + 1):
        h = extremal_family(k)
        classes = vertex_classes(h)
        if h.n != 2**k - 2 or h.m != 2 ** (k - 1):
            return CheckResult("edge-count-lower-bound", False, "family sizes wrong")
        if h.m != (h.n + 2 + 1) // 2:
            return CheckResult("edge-count-lower-bound", False, "family misses the bound")
        if classes.universal or classes.isolated or classes.twin_pairs:
            return CheckResult("edge-count-lower-bound", False, "family has trivial vertices")
        if not is_one_sperner(h):
            return CheckResult("edge-count-lower-bound", False, "family left the class")
    return CheckResult(
        "edge-count-lower-bound",
        True,
        f"{checked} reduced instances, extremal levels 2..{kmax}",
    )


def check_graph_characterizations(graph_cap: int):
    total = 0
    for n in range(graph_cap + 1):
        for g in all_graphs(n):
            total += 1
            forb, _ = is_threshold_graph_forbidden(g)
            order, _ = is_threshold_graph_ordering(g)
            if forb != order:
                return CheckResult(
                    "threshold-graph-characterizations", False, "tests disagree"
                )
    return CheckResult(
        "threshold-graph-characterizations", True, f"{total} graphs agree"
    )


def check_clique_equivalence(graph_cap: int):
    total = 0
    for n in range(graph_cap + 1):
        for g in all_graphs(n):
            total += 1
            report = threshold_equivalence_report(g)
            if len(set(report.flags())) != 1:
                return CheckResult(
                    "clique-hypergraph-equivalence", False, "verdicts disagree"
                )
    return CheckResult("clique-hypergraph-equivalence", True, f"{total} graphs agree")


def check_stable_set_variant(graph_cap: int):
    total = 0
    for n in range(graph_cap + 1):
        for g in all_graphs(n):
            total += 1
            forb, _ = is_threshold_graph_forbidden(g)
            if is_one_sperner(stable_set_hypergraph(g)) != forb:
                return CheckResult("stable-set-variant", False, "verdicts disagree")
    return CheckResult("stable-set-variant", True, f"{total} graphs agree")


def check_clique_exchange(graph_cap: int):
    checked = 0
    for n in range(graph_cap + 1):
        for g in all_graphs(n):
            ch = clique_hypergraph(g)
            if is_k_asummable(ch, 2) is not True:
                continue
            cliques = maximal_cliques(g)
            for a_set in cliques:
                for b_set in cliques:
                    if a_set == b_set:
                        continue
                    for a in a_set - b_set:
                        for b in b_set - a_set:
                            checked += 1
                            if g.has_edge(a, b):
                                return CheckResult(
                                    "clique-exchange-properties",
                                    False,
                                    "edge across the exchange",
                                )
                            rest = (a_set | b_set) - {a, b}
                            if not is_independent(ch, rest):
                                return CheckResult(
                                    "clique-exchange-properties",
                                    False,
                                    "union minus exchange is dependent",
                                )
    return CheckResult("clique-exchange-properties", True, f"{checked} exchanges")


def run_all(enum_cap: int = 4, graph_cap: int = 4, seed: int = 96221) -> list[CheckResult]:
    """Run every check; caps bound the enumerated populations."""
    enumerated_os = _enumerated_one_sperner(enum_cap)
    randoms = _random_instances(150, 10, seed)
    weights_pop = [h for h in enumerated_os if h.n <= 12] + [
        h for h in randoms if h.n <= 12
    ]
    results = [
        check_safe_gluing_closure(200, 50, seed),
        check_complement_closure(enumerated_os + randoms),
        check_complement_of_gluing(100, seed + 1),
        check_complement_decomposability(enumerated_os),
        check_isolated_universal_decomposability(enumerated_os + randoms),
        check_max_edge_trace(enumerated_os),
        check_uniform_core(enumerated_os, seed + 2),
        check_decomposition_existence(enumerated_os),
        check_round_trip(enumerated_os, randoms),
        check_threshold_separator(weights_pop),
        check_equalizing(weights_pop),
        check_normalized_vector(weights_pop),
        check_ones_combination(
            [h for h in enumerated_os if h.edges and h.edges != (0,)]
        ),
        check_char_rank(enumerated_os + randoms),
        check_edge_count_upper(enumerated_os + randoms),
        check_edge_count_lower(enumerated_os, kmax=5),
        check_graph_characterizations(graph_cap),
        check_clique_equivalence(graph_cap),
        check_stable_set_variant(graph_cap),
        check_clique_exchange(min(graph_cap, 4)),
    ]
    return results

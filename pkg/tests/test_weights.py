"""Weight synthesis, exhaustive verification, and exact linear algebra."""

import itertools
from fractions import Fraction

import pytest
import sympy

from onesperner import (
    Hypergraph,
    WeightAssignment,
    char_rank,
    equalizing_weights,
    glue,
    incidence_matrix,
    make_hypergraph,
    normalized_vector,
    random_one_sperner,
    star,
    threshold_property_violation,
    threshold_separator,
    verify_equalizing,
    verify_threshold_separator,
)
from onesperner.errors import CapExceeded, DegenerateEdgeSet, NotOneSperner
from onesperner.gen import extremal_family


def h2():
    return make_hypergraph(["v1", "v2"], [{"v1"}, {"v2"}])


def k4_edge_set():
    return make_hypergraph(
        "1234", [set(p) for p in itertools.combinations("1234", 2)]
    )


def brute_force_separator_ok(h, weights, t):
    for r in range(h.n + 1):
        for combo in itertools.combinations(h.vertices, r):
            total = sum(weights[v] for v in combo)
            dependent = any(
                set(h.labels_of(e)) <= set(combo) for e in h.edges
            )
            if (total >= t) != dependent:
                return False
    return True


class TestSynthesis:
    def test_vertex_free_base_cases(self):
        wa = threshold_separator(Hypergraph())
        assert wa.weights == {} and wa.threshold == 1
        wa = threshold_separator(Hypergraph((), (0,)))
        assert wa.weights == {} and wa.threshold == 0

    def test_h2(self):
        wa = threshold_separator(h2())
        assert wa.weights["v1"] == wa.weights["v2"] == wa.threshold > 0
        assert brute_force_separator_ok(h2(), wa.weights, wa.threshold)
        assert verify_threshold_separator(h2(), wa)

    def test_equalizing_matches_separator(self):
        for seed in range(30):
            h = random_one_sperner(seed % 9, seed=seed)
            assert equalizing_weights(h) == threshold_separator(h)

    def test_rejects_non_one_sperner(self):
        with pytest.raises(NotOneSperner):
            threshold_separator(
                make_hypergraph("ab", [{"a"}, {"a", "b"}])
            )

    def test_isolated_vertex_instance(self):
        # Exercises the isolated-gluing-vertex branch of the recursion.
        h = make_hypergraph(["u", "a"], [{"a"}])
        wa = threshold_separator(h)
        assert all(w > 0 for w in wa.weights.values())
        assert verify_threshold_separator(h, wa)
        assert verify_equalizing(h, wa)

    def test_niceness_clauses_hold_on_synthesis(self):
        for seed in range(200):
            h = random_one_sperner(seed % 11, seed=seed)
            wa = threshold_separator(h)
            if wa.total == wa.threshold:
                assert set(h.edges) == {h.full_mask}
            if wa.threshold == 0:
                assert h.edges == (0,)


class TestVerification:
    def test_all_ones_fails_on_h2(self):
        wa = WeightAssignment({"v1": 1, "v2": 1}, 2)
        assert not verify_threshold_separator(h2(), wa)
        assert threshold_property_violation(h2(), wa.weights, 2) == {"v1"}

    def test_k4_edge_set_is_threshold(self):
        wa = WeightAssignment({v: 1 for v in "1234"}, 2)
        assert verify_threshold_separator(k4_edge_set(), wa)

    def test_equalizing_examples(self):
        wa = equalizing_weights(Hypergraph((), (0,)))
        assert wa.threshold == 0
        assert verify_equalizing(Hypergraph((), (0,)), wa)

        wa = WeightAssignment({"v1": 1, "v2": 1}, 2)
        assert not verify_equalizing(h2(), wa)

        empty = Hypergraph()
        assert verify_equalizing(empty, WeightAssignment({}, 1))

    def test_two_star_equalizing(self):
        h = star(["x", "y1", "y2"], ["x"], ["y1", "y2"])
        wa = equalizing_weights(h)
        t = wa.threshold
        hits = [
            set(combo)
            for r in range(4)
            for combo in itertools.combinations(h.vertices, r)
            if sum(wa.weights[v] for v in combo) == t
        ]
        assert hits == [{"x", "y1"}, {"x", "y2"}]

    def test_cap_refusal(self):
        h = Hypergraph(tuple(f"v{i}" for i in range(25)), ())
        with pytest.raises(CapExceeded):
            verify_threshold_separator(
                h, WeightAssignment({v: 1 for v in h.vertices}, 1)
            )

    def test_big_integer_fallback_path(self):
        big = 2**63
        wa = WeightAssignment({"v1": big, "v2": big}, big)
        assert verify_threshold_separator(h2(), wa)
        assert verify_equalizing(h2(), wa)
        assert threshold_property_violation(h2(), {"v1": big, "v2": 1}, big) == {
            "v2"
        }

    def test_weight_assignment_validation(self):
        with pytest.raises(ValueError):
            WeightAssignment({"a": 0}, 1)
        with pytest.raises(ValueError):
            WeightAssignment({"a": 1}, -1)
        with pytest.raises(ValueError):
            WeightAssignment({"a": Fraction(1, 2)}, 1)


class TestWeightGrowth:
    def test_deep_family_stays_exact(self):
        h = extremal_family(8)
        wa = threshold_separator(h)
        assert all(isinstance(w, int) and w > 0 for w in wa.weights.values())
        # Every edge hits the threshold exactly; spot-proof of the
        # equalizing property that avoids the 2**254 subset scan.
        for e in h.edges:
            assert sum(wa.weights[v] for v in h.labels_of(e)) == wa.threshold

    def test_weights_can_exceed_machine_integers(self):
        h = make_hypergraph(["a"], [{"a"}])
        for i in range(70):
            ext = make_hypergraph([f"s{i}"], [{f"s{i}"}])
            h = glue(h, ext, f"z{i}")
        wa = threshold_separator(h)
        assert max(wa.weights.values()) > 2**64


class TestNormalizedVector:
    def test_h2(self):
        x = normalized_vector(h2()).entries
        assert x == {"v1": Fraction(1), "v2": Fraction(1)}

    def test_single_edge(self):
        h = make_hypergraph(["a", "b"], [{"a", "b"}])
        x = normalized_vector(h).entries
        assert x == {"a": Fraction(1, 2), "b": Fraction(1, 2)}

    def test_degenerate_edge_sets_rejected(self):
        with pytest.raises(DegenerateEdgeSet):
            normalized_vector(make_hypergraph(["a"], [set()]))
        with pytest.raises(DegenerateEdgeSet):
            normalized_vector(make_hypergraph(["a"], []))

    def test_exactness_on_random_instances(self):
        for seed in range(120):
            h = random_one_sperner(seed % 10, seed=seed)
            if not h.edges or h.edges == (0,):
                continue
            x = normalized_vector(h).entries
            for e in h.edges:
                assert sum(x[v] for v in h.labels_of(e)) == 1
            assert sum(x.values()) >= 1


class TestCharRank:
    def test_h2(self):
        assert char_rank(h2()) == 2

    def test_dependent_rows(self):
        h = make_hypergraph(
            "123", [{"1", "2"}, {"2", "3"}, {"1", "3"}, {"1", "2", "3"}]
        )
        assert char_rank(h) == 3  # four edges, rank three

    def test_matches_sympy_on_random_matrices(self):
        import random

        rng = random.Random(9)
        for _ in range(60):
            n = rng.randint(1, 6)
            m = rng.randint(0, 6)
            masks = set()
            while len(masks) < m:
                masks.add(rng.randrange(1 << n))
            h = Hypergraph(tuple(f"r{i}" for i in range(n)), tuple(sorted(masks)))
            expected = sympy.Matrix(incidence_matrix(h).to_lists()).rank() if h.m else 0
            assert char_rank(h) == expected

    def test_full_rank_for_one_sperner(self):
        for seed in range(150):
            h = random_one_sperner(seed % 12, seed=seed)
            if h.edges == (0,):
                continue
            assert char_rank(h) == h.m


def solve_ones_combination(h):
    """Exact solve of transpose(A) . lam = all-ones; None if inconsistent."""
    n, m = h.n, h.m
    rows = [
        [Fraction((h.edges[i] >> j) & 1) for i in range(m)] + [Fraction(1)]
        for j in range(n)
    ]
    mat = sympy.Matrix([[sympy.Rational(x) for x in row] for row in rows])
    a, b = mat[:, :-1], mat[:, -1]
    try:
        sol, params = a.gauss_jordan_solve(b)
    except ValueError:
        return None
    sol = sol.subs({p: 0 for p in params})
    return [Fraction(sympy.nsimplify(v).p, sympy.nsimplify(v).q) for v in sol]


class TestOnesCombination:
    def test_sum_at_least_one_on_small_instances(self, enumerated_one_sperner):
        solved = 0
        for h in enumerated_one_sperner:
            if not h.edges or h.edges == (0,) or h.n > 4:
                continue
            lam = solve_ones_combination(h)
            if lam is None:
                continue
            solved += 1
            assert sum(lam) >= 1
        assert solved > 50

"""Core value types, predicates and transforms."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from onesperner import (
    Hypergraph,
    IncidenceMatrix,
    complement,
    incidence_matrix,
    is_conformal,
    is_dually_sperner,
    is_one_sperner,
    is_sperner,
    k_of,
    make_graph,
    make_hypergraph,
    permutation_equivalent,
    vertex_classes,
)
from onesperner.core import iter_bits
from onesperner.decomp import glue
from onesperner.errors import (
    DuplicateEdge,
    DuplicateVertex,
    InvalidLabel,
    LoopEdge,
    NotSperner,
    SizeCapExceeded,
    UnknownVertex,
)
from onesperner.gen import extremal_family
from onesperner.graphs import clique_hypergraph


def h2():
    return make_hypergraph(["v1", "v2"], [{"v1"}, {"v2"}])


def k4_edge_set():
    return make_hypergraph(
        "1234", [set(p) for p in itertools.combinations("1234", 2)]
    )


# Random small hypergraphs as (n, edge mask list) pairs.
hypergraphs = st.integers(0, 5).flatmap(
    lambda n: st.sets(st.integers(0, (1 << n) - 1), max_size=8).map(
        lambda masks: Hypergraph(
            tuple(f"x{i}" for i in range(n)), tuple(sorted(masks))
        )
    )
)


class TestConstruction:
    def test_h2(self):
        h = h2()
        assert h.vertices == ("v1", "v2")
        assert h.edge_sets() == (frozenset({"v1"}), frozenset({"v2"}))

    def test_empty_hypergraph(self):
        h = make_hypergraph([], [])
        assert h.n == 0 and h.m == 0

    def test_vertex_free_hypergraphs_distinct(self):
        assert Hypergraph((), ()) != Hypergraph((), (0,))
        assert make_hypergraph([], [set()]).edges == (0,)

    def test_duplicate_edge_rejected(self):
        with pytest.raises(DuplicateEdge):
            make_hypergraph(["a"], [{"a"}, {"a"}])

    def test_duplicate_vertex_rejected(self):
        with pytest.raises(DuplicateVertex):
            make_hypergraph(["a", "a"], [])

    def test_unknown_vertex_rejected(self):
        with pytest.raises(UnknownVertex):
            make_hypergraph(["a"], [{"b"}])

    @pytest.mark.parametrize("label", ["", "a b", "x\t", "ha#sh", 3])
    def test_bad_labels_rejected(self, label):
        with pytest.raises(InvalidLabel):
            make_hypergraph([label], [])

    def test_graph_validation(self):
        with pytest.raises(LoopEdge):
            make_graph(["a"], [("a", "a")])
        with pytest.raises(DuplicateEdge):
            make_graph(["a", "b"], [("a", "b"), ("b", "a")])
        g = make_graph(["a", "b", "c"], [("c", "a")])
        assert g.edges == ((0, 2),)


class TestPredicates:
    def test_sperner_examples(self):
        assert not is_sperner(make_hypergraph(["a", "b"], [{"a"}, {"a", "b"}]))
        assert is_sperner(h2())
        assert is_sperner(Hypergraph((), (0,)))

    def test_dually_sperner_examples(self):
        assert is_dually_sperner(make_hypergraph(["a", "b"], [{"a"}, {"a", "b"}]))
        assert not is_dually_sperner(k4_edge_set())
        assert is_dually_sperner(make_hypergraph(["a", "b"], [{"a", "b"}]))

    def test_one_sperner_examples(self):
        two_star = make_hypergraph(
            ["x", "y1", "y2"], [{"x", "y1"}, {"x", "y2"}]
        )
        assert is_one_sperner(two_star)
        assert not is_one_sperner(k4_edge_set())
        assert is_one_sperner(Hypergraph((), ()))

    @given(hypergraphs)
    def test_one_sperner_is_the_conjunction(self, h):
        # Independent pairwise scan against the library predicates.
        expected = all(
            min((a & ~b).bit_count(), (b & ~a).bit_count()) == 1
            for a, b in itertools.combinations(h.edges, 2)
        )
        assert is_one_sperner(h) == expected
        assert expected == (is_sperner(h) and is_dually_sperner(h))


class TestComplement:
    def test_example(self):
        h = make_hypergraph("abc", [{"a", "b"}, {"b", "c"}])
        assert complement(h).edge_sets() == (frozenset("c"), frozenset("a"))

    def test_involution_on_h2(self):
        assert complement(complement(h2())) == h2()

    @given(hypergraphs)
    def test_involution(self, h):
        assert complement(complement(h)) == h


class TestIncidence:
    def test_h2_rows(self):
        m = incidence_matrix(h2())
        assert m.to_lists() == [[1, 0], [0, 1]]

    def test_no_edges(self):
        m = incidence_matrix(make_hypergraph(["a"], []))
        assert m.row_count == 0 and m.cols == 1

    def test_glue_block_form(self):
        h1 = make_hypergraph(["a", "b"], [{"a"}, {"a", "b"}])
        h2_ = make_hypergraph(["c"], [{"c"}, set()])
        glued = glue(h1, h2_, "z")
        lists = incidence_matrix(glued).to_lists()
        a1 = incidence_matrix(h1).to_lists()
        a2 = incidence_matrix(h2_).to_lists()
        expected = [[1] + row + [0] * h2_.n for row in a1]
        expected += [[0] + [1] * h1.n + row for row in a2]
        assert lists == expected

    @given(hypergraphs)
    def test_rebuild_from_incidence(self, h):
        m = incidence_matrix(h)
        assert Hypergraph(h.vertices, m.rows) == h


def brute_force_equivalent(a: IncidenceMatrix, b: IncidenceMatrix) -> bool:
    if a.cols != b.cols or a.row_count != b.row_count:
        return False
    bl = b.to_lists()
    for rp in itertools.permutations(range(a.row_count)):
        for cp in itertools.permutations(range(a.cols)):
            if all(
                a.entry(i, j) == bl[rp[i]][cp[j]]
                for i in range(a.row_count)
                for j in range(a.cols)
            ):
                return True
    return False


class TestPermutationEquivalence:
    def test_row_swap(self):
        a = IncidenceMatrix.from_lists([[1, 0], [1, 1]])
        b = IncidenceMatrix.from_lists([[1, 1], [1, 0]])
        assert permutation_equivalent(a, b)

    def test_different_entries(self):
        one = IncidenceMatrix.from_lists([[1]])
        zero = IncidenceMatrix.from_lists([[0]])
        assert not permutation_equivalent(one, zero)

    def test_cap(self):
        big = IncidenceMatrix((0,) * 17, 3)
        with pytest.raises(SizeCapExceeded):
            permutation_equivalent(big, big)
        assert permutation_equivalent(big, big, cap=17)

    def test_matches_brute_force_on_small_matrices(self):
        import random

        rng = random.Random(5)
        for _ in range(120):
            rows, cols = rng.randint(1, 3), rng.randint(1, 3)
            a = IncidenceMatrix(
                tuple(rng.randrange(1 << cols) for _ in range(rows)), cols
            )
            b = IncidenceMatrix(
                tuple(rng.randrange(1 << cols) for _ in range(rows)), cols
            )
            assert permutation_equivalent(a, b) == brute_force_equivalent(a, b)
            # A genuinely permuted copy must always match.
            rp = list(range(rows))
            cp = list(range(cols))
            rng.shuffle(rp)
            rng.shuffle(cp)
            shuffled = IncidenceMatrix.from_lists(
                [
                    [a.entry(rp[i], cp[j]) for j in range(cols)]
                    for i in range(rows)
                ]
            )
            assert permutation_equivalent(a, shuffled)

    def test_h3_matches_brute_force(self):
        h3 = extremal_family(3)
        a = incidence_matrix(h3)
        b = incidence_matrix(
            Hypergraph(h3.vertices, tuple(reversed(h3.edges)))
        )
        assert brute_force_equivalent(a, b)
        assert permutation_equivalent(a, b)


class TestVertexClasses:
    def test_single_full_edge(self):
        c = vertex_classes(make_hypergraph(["a", "b"], [{"a", "b"}]))
        assert c.universal == {"a", "b"}
        assert c.isolated == frozenset()
        assert c.twin_pairs == {("a", "b")}

    def test_one_singleton_edge(self):
        c = vertex_classes(make_hypergraph(["a", "b"], [{"a"}]))
        assert c.universal == {"a"}
        assert c.isolated == {"b"}
        assert c.twin_pairs == frozenset()

    def test_extremal_family_has_no_trivial_vertices(self):
        c = vertex_classes(extremal_family(3))
        assert not c.universal and not c.isolated and not c.twin_pairs

    @given(hypergraphs)
    def test_universal_isolated_duality(self, h):
        comp = complement(h)
        assert vertex_classes(h).universal == vertex_classes(comp).isolated
        assert vertex_classes(h).isolated == vertex_classes(comp).universal


def conformal_by_definition(h: Hypergraph) -> bool:
    n = h.n

    def covered(i, j):
        return any(e >> i & 1 and e >> j & 1 for e in h.edges)

    for mask in range(1 << n):
        bits = list(iter_bits(mask))
        if all(covered(i, j) for i, j in itertools.combinations(bits, 2)):
            if not any(mask & ~e == 0 for e in h.edges):
                return False
    return True


class TestConformality:
    def test_triangle_of_pairs_is_not_conformal(self):
        h = make_hypergraph("123", [{"1", "2"}, {"2", "3"}, {"1", "3"}])
        assert conformal_by_definition(h) is False
        assert is_conformal(h) is False

    def test_single_full_edge(self):
        assert is_conformal(make_hypergraph("123", [{"1", "2", "3"}]))

    def test_clique_hypergraph_of_c4(self):
        g = make_graph("abcd", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])
        ch = clique_hypergraph(g)
        assert conformal_by_definition(ch)
        assert is_conformal(ch)

    def test_rejects_non_sperner(self):
        with pytest.raises(NotSperner):
            is_conformal(make_hypergraph("ab", [{"a"}, {"a", "b"}]))

    def test_matches_definition_on_all_small_clutters(self, enumerated_by_n):
        for n in range(5):
            for h in enumerated_by_n[n]:
                assert is_conformal(h) == conformal_by_definition(h)


class TestKOf:
    def test_examples(self):
        h = make_hypergraph(["a", "b"], [{"a"}, {"a", "b"}])
        assert k_of(h, "a") == 2
        assert k_of(h, "b") == 2

    def test_isolated_vertex_has_no_value(self):
        h = make_hypergraph(["a", "b"], [{"a"}])
        assert k_of(h, "b") is None

    def test_unknown_vertex(self):
        with pytest.raises(UnknownVertex):
            k_of(h2(), "nope")

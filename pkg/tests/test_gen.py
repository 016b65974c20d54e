"""Named family constructors and the seeded random generator."""

import pytest

from onesperner import (
    Hypergraph,
    antistar,
    complement,
    extremal_family,
    is_one_sperner,
    make_hypergraph,
    random_one_sperner,
    star,
    vertex_classes,
)
from onesperner.errors import CapExceeded, InvalidGenerator


class TestStar:
    def test_example(self):
        h = star(["x", "y1", "y2"], ["x"], ["y1", "y2"])
        assert h.edge_sets() == (
            frozenset({"x", "y1"}),
            frozenset({"x", "y2"}),
        )

    def test_empty_common_part_gives_singletons(self):
        h = star(["a", "b"], [], ["a", "b"])
        assert h == make_hypergraph(["a", "b"], [{"a"}, {"b"}])

    def test_uniformity(self):
        h = star("abcde", ["a", "b"], ["c", "d", "e"])
        assert all(e.bit_count() == 3 for e in h.edges)

    def test_invalid_generators(self):
        with pytest.raises(InvalidGenerator):
            star(["a", "b"], ["a"], ["a", "b"])  # overlap
        with pytest.raises(InvalidGenerator):
            star(["a"], ["a"], [])  # empty Y
        with pytest.raises(InvalidGenerator):
            star(["a"], [], ["b"])  # outside V


class TestAntistar:
    def test_example(self):
        h = antistar("123", [], ["1", "2", "3"])
        assert h.edge_sets() == (
            frozenset({"2", "3"}),
            frozenset({"1", "3"}),
            frozenset({"1", "2"}),
        )

    def test_singleton_y_gives_single_edge(self):
        h = antistar(["a", "b", "y"], ["a", "b"], ["y"])
        assert h.edge_sets() == (frozenset({"a", "b"}),)

    def test_uniformity(self):
        h = antistar("abcde", ["a"], ["b", "c", "d", "e"])
        assert all(e.bit_count() == 4 for e in h.edges)

    def test_complement_of_star_is_antistar(self):
        # complement(star(V, X, Y)) matches antistar(V, V - X - Y, Y); with
        # V = X + Y the common part of the antistar is empty.
        v = list("abcdef")
        x, y = ["a", "b"], ["c", "d", "e"]
        comp = complement(star(v, x, y))
        expected = antistar(v, ["f"], y)
        assert comp.same_unordered(expected)
        v2 = ["a", "b", "c"]
        comp2 = complement(star(v2, ["a"], ["b", "c"]))
        assert comp2.same_unordered(antistar(v2, [], ["b", "c"]))


class TestExtremalFamily:
    def test_level_two(self):
        h = extremal_family(2)
        assert h == make_hypergraph(["v1", "v2"], [{"v1"}, {"v2"}])

    @pytest.mark.parametrize("k", [2, 3, 4, 5])
    def test_sizes(self, k):
        h = extremal_family(k)
        assert h.n == 2**k - 2
        assert h.m == 2 ** (k - 1)
        assert h.m == (h.n + 2 + 1) // 2
        assert is_one_sperner(h)

    def test_level_five_matches_bound(self):
        h = extremal_family(5)
        assert (h.n, h.m) == (30, 16)

    def test_no_trivial_vertices(self):
        for k in range(2, 7):
            c = vertex_classes(extremal_family(k))
            assert not c.universal and not c.isolated and not c.twin_pairs

    def test_caps(self):
        with pytest.raises(InvalidGenerator):
            extremal_family(1)
        with pytest.raises(CapExceeded):
            extremal_family(13)
        extremal_family(13, cap=13)


class TestRandomOneSperner:
    def test_zero_vertices(self):
        h = random_one_sperner(0, seed=4)
        assert h.n == 0
        assert h in (Hypergraph(), Hypergraph((), (0,)))

    def test_deterministic(self):
        assert random_one_sperner(10, seed=7) == random_one_sperner(10, seed=7)

    def test_exact_size_and_membership(self):
        for seed in range(400):
            n = seed % 15
            h = random_one_sperner(n, seed=seed)
            assert h.n == n
            assert is_one_sperner(h)

    def test_negative_size_rejected(self):
        with pytest.raises(InvalidGenerator):
            random_one_sperner(-1, seed=0)

import random

import pytest

from c4ramsey import (
    EdgeColoring,
    SimpleGraph,
    coloring_from_text,
    coloring_to_text,
    contains_target,
    degree,
    find_target_copy,
    is_good_coloring,
    pair_index,
)
from c4ramsey.graphs import IncompleteColoringError, pair_iter
from c4ramsey.targets import CYCLE4, PATH3, book, clique, empty_graph, star, with_isolated

from conftest import brute_contains, random_graph, two_five_cycles


def complete_mono(n, c=1, color=0):
    col = EdgeColoring(n, max(c, color + 1))
    for u, v in pair_iter(n):
        col.set(u, v, color)
    return col


class TestPairIndex:
    def test_canonical_order_is_contiguous(self):
        idxs = [pair_index(u, v) for (u, v) in pair_iter(10)]
        assert idxs == list(range(45))

    def test_symmetric(self):
        assert pair_index(3, 7) == pair_index(7, 3)

    def test_rejects_self_pair(self):
        with pytest.raises(ValueError):
            pair_index(2, 2)


class TestSimpleGraph:
    def test_adjacency_symmetric_irreflexive(self):
        g = random_graph(random.Random(1), 12)
        for v in range(g.n):
            assert not (g.adj[v] >> v & 1)
            for w in range(g.n):
                if w != v:
                    assert g.has_edge(v, w) == g.has_edge(w, v)

    def test_vertex_cap(self):
        with pytest.raises(ValueError):
            SimpleGraph(129)
        with pytest.raises(ValueError):
            SimpleGraph(0)

    def test_no_self_loops(self):
        with pytest.raises(ValueError):
            SimpleGraph(3, [(1, 1)])

    def test_complement(self):
        g = SimpleGraph(5, [(0, 1), (2, 3)])
        comp = g.complement()
        assert comp.edge_count() == 10 - 2
        assert not comp.has_edge(0, 1) and comp.has_edge(0, 2)

    def test_delete_vertex_relabels(self):
        g = SimpleGraph(4, [(0, 1), (1, 2), (2, 3)])
        h = g.delete_vertex(1)
        assert h.n == 3
        assert h.edges() == [(1, 2)]  # old (2,3) relabeled down

    def test_delete_last_vertex_fails(self):
        with pytest.raises(ValueError):
            SimpleGraph(1).delete_vertex(0)


class TestDegree:
    def test_mono_k3(self):
        col = complete_mono(3)
        for v in range(3):
            assert degree(col, 0, v) == 2

    def test_other_color_zero(self):
        col = EdgeColoring(2, 2)
        col.set(0, 1, 1)
        assert degree(col, 0, 0) == 0
        assert degree(col, 1, 0) == 1

    def test_two_cycle_decomposition(self):
        col = two_five_cycles()
        for v in range(5):
            assert degree(col, 0, v) == 2
            assert degree(col, 1, v) == 2

    def test_partial_counts_assigned_only(self):
        col = EdgeColoring(4, 2)
        col.set(0, 1, 0)
        assert degree(col, 0, 0) == 1
        assert degree(col, 1, 0) == 0

    def test_index_errors(self):
        col = EdgeColoring(3, 2)
        with pytest.raises(IndexError):
            degree(col, 2, 0)
        with pytest.raises(IndexError):
            degree(col, 0, 3)

    def test_degree_sum_is_n_minus_1(self):
        rng = random.Random(7)
        col = EdgeColoring(7, 3)
        for u, v in pair_iter(7):
            col.set(u, v, rng.randrange(3))
        for v in range(7):
            assert sum(degree(col, i, v) for i in range(3)) == 6


class TestContainsTarget:
    def test_c5_has_no_c4(self):
        c5 = SimpleGraph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
        assert not contains_target(c5, CYCLE4)

    def test_k4_contains_book2(self):
        k4 = SimpleGraph(4, [(u, v) for v in range(4) for u in range(v)])
        assert contains_target(k4, book(2))

    def test_empty_target_is_vertex_counting(self):
        g = SimpleGraph(9)
        assert contains_target(g, empty_graph(9))
        assert not contains_target(g, empty_graph(10))

    def test_with_isolated(self):
        g = SimpleGraph(4, [(0, 1), (1, 2), (0, 2)])
        assert contains_target(g, with_isolated(clique(3), 1))
        assert not contains_target(g, with_isolated(clique(3), 2))

    @pytest.mark.parametrize("seed", range(30))
    def test_agrees_with_brute_force(self, seed):
        rng = random.Random(seed)
        g = random_graph(rng, rng.randint(2, 8), rng.choice([0.2, 0.5, 0.8]))
        targets = [
            PATH3, CYCLE4, clique(3), clique(4), clique(5),
            star(2), star(3), star(4), book(1), book(2), book(3),
            empty_graph(3), with_isolated(clique(3), 2), with_isolated(PATH3, 1),
        ]
        for t in targets:
            assert contains_target(g, t) == brute_contains(g, t), (g, t)

    def test_c4_equals_common_neighbor_rule(self):
        rng = random.Random(99)
        for _ in range(40):
            g = random_graph(rng, rng.randint(4, 10))
            pair_rule = any(
                (g.adj[u] & g.adj[v]).bit_count() >= 2
                for u in range(g.n)
                for v in range(u + 1, g.n)
            )
            assert contains_target(g, CYCLE4) == pair_rule == brute_contains(g, CYCLE4)


class TestFindTargetCopy:
    def test_finds_triangle(self):
        g = SimpleGraph(5, [(0, 1), (1, 4), (0, 4)])
        copy = find_target_copy(g, clique(3))
        assert sorted(copy) == [0, 1, 4]

    def test_none_when_absent(self):
        g = SimpleGraph(4, [(0, 1)])
        assert find_target_copy(g, clique(3)) is None


class TestIsGoodColoring:
    def test_two_cycles_good_for_c4_c4(self):
        assert is_good_coloring(two_five_cycles(), [CYCLE4, CYCLE4])

    def test_mono_k3_bad_for_p3(self):
        col = complete_mono(3, c=2)
        assert not is_good_coloring(col, [PATH3, PATH3])

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            is_good_coloring(complete_mono(3), [PATH3, PATH3])

    def test_partial_rejected(self):
        col = EdgeColoring(3, 1)
        col.set(0, 1, 0)
        with pytest.raises(IncompleteColoringError):
            is_good_coloring(col, [clique(3)])


class TestDeleteVertex:
    def test_preserves_goodness(self):
        col = two_five_cycles()
        for v in range(5):
            assert is_good_coloring(col.delete_vertex(v), [CYCLE4, CYCLE4])

    def test_k2_to_k1(self):
        col = EdgeColoring(2, 1)
        col.set(0, 1, 0)
        h = col.delete_vertex(0)
        assert h.n == 1 and h.colors == []

    def test_relabeling_matches_graph_deletion(self):
        rng = random.Random(3)
        col = EdgeColoring(7, 3)
        for u, v in pair_iter(7):
            col.set(u, v, rng.randrange(3))
        for v in range(7):
            reduced = col.delete_vertex(v)
            for i in range(3):
                assert reduced.color_class(i) == col.color_class(i).delete_vertex(v)


class TestColoringTextFormat:
    def test_round_trip(self):
        col = two_five_cycles()
        assert coloring_from_text(coloring_to_text(col)) == col

    def test_partial_round_trip(self):
        col = EdgeColoring(4, 2)
        col.set(0, 1, 1)
        assert coloring_from_text(coloring_to_text(col)) == col

    def test_comments_and_whitespace(self):
        text = "# witness\n  3 2  \n0 1 0 # first\n0 2 1\n1 2 0\n"
        col = coloring_from_text(text)
        assert col.get(0, 2) == 1 and col.is_complete()

    def test_duplicate_pair_rejected(self):
        with pytest.raises(ValueError):
            coloring_from_text("3 2\n0 1 0\n1 0 1\n")

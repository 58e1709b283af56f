import numpy as np
import pytest

from smallworld.modules.confluence import ConfluenceExtractor, ScgParams, ScoredPair
from smallworld.modules.errors import ParameterError, ParityError, WalkLengthError
from smallworld.modules.graph import Graph
from smallworld.modules.settings_manager import SettingsManager

from oracles import (brute_force_scg_edges, complete_graph, dense_transition, dense_walk_matrix,
                     random_graph)


class TestWalkMatrix:

    def test_first_step_is_transition_matrix(self, path4):
        walk_matrix = ConfluenceExtractor.all_pairs_walk_matrix(path4, 1)
        assert np.allclose(walk_matrix, dense_transition(path4), atol=1e-15)

    def test_two_node_graph(self, two_node):
        assert (ConfluenceExtractor.all_pairs_walk_matrix(two_node, 5) == 0.5).all()

    def test_path_two_steps(self, path4):
        walk_matrix = ConfluenceExtractor.all_pairs_walk_matrix(path4, 2)
        assert np.allclose(walk_matrix[0], [5 / 12, 5 / 12, 1 / 6, 0.0])
        assert np.allclose(walk_matrix, dense_walk_matrix(path4, 2))

    def test_zero_length_rejected(self, path4):
        with pytest.raises(WalkLengthError):
            ConfluenceExtractor.all_pairs_walk_matrix(path4, 0)


class TestRankPairs:

    def test_path_one_step(self, path4):
        ranked = ConfluenceExtractor.rank_pairs(ConfluenceExtractor.all_pairs_walk_matrix(path4, 1))
        assert [(p.u, p.v) for p in ranked[:3]] == [(0, 1), (2, 3), (1, 2)]
        assert [p.score for p in ranked[:3]] == pytest.approx([1 / 2, 1 / 2, 1 / 3])
        assert [p.score for p in ranked[3:]] == [0.0, 0.0, 0.0]
        assert [(p.u, p.v) for p in ranked[3:]] == [(0, 2), (0, 3), (1, 3)]

    def test_two_node_graph(self, two_node):
        ranked = ConfluenceExtractor.rank_pairs(ConfluenceExtractor.all_pairs_walk_matrix(two_node, 1))
        assert ranked == [ScoredPair(0, 1, 0.5)]

    def test_edgeless_graph_is_lexicographic(self):
        ranked = ConfluenceExtractor.rank_pairs(ConfluenceExtractor.all_pairs_walk_matrix(Graph(4), 3))
        assert [(p.u, p.v) for p in ranked] == [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
        assert all(p.score == 0.0 for p in ranked)

    def test_exclusions_are_skipped(self, path4):
        walk_matrix = ConfluenceExtractor.all_pairs_walk_matrix(path4, 1)
        ranked = ConfluenceExtractor.rank_pairs(walk_matrix, exclude={(1, 0), (2, 3)})
        assert [(p.u, p.v) for p in ranked] == [(1, 2), (0, 2), (0, 3), (1, 3)]

    def test_top_selection_matches_full_ranking(self, rng):
        graph = random_graph(rng, 25, 0.1)
        walk_matrix = ConfluenceExtractor.all_pairs_walk_matrix(graph, 3)
        us, vs, scores = ConfluenceExtractor.ranked_arrays(walk_matrix)
        for count in (0, 1, 17, 120, len(us)):
            top = ConfluenceExtractor.select_top(walk_matrix, count)
            assert top[0].tolist() == us[:count].tolist()
            assert top[1].tolist() == vs[:count].tolist()

    def test_scored_pair_validation(self):
        with pytest.raises(ValueError):
            ScoredPair(3, 1, 0.2)
        with pytest.raises(ValueError):
            ScoredPair(1, 3, 1.5)


class TestTies:

    @staticmethod
    def upper_matrix(n, entries):
        walk_matrix = np.zeros((n, n))
        for (u, v), value in entries.items():
            walk_matrix[u, v] = value
        return walk_matrix

    def test_near_equal_scores_across_a_decimal_boundary_tie(self):
        boundary = 0.2500000000005
        walk_matrix = self.upper_matrix(3, {(0, 1): boundary - 1e-16, (0, 2): boundary + 1e-16,
                                            (1, 2): 0.25 - 1e-9})
        ranked = ConfluenceExtractor.rank_pairs(walk_matrix)
        assert [(p.u, p.v) for p in ranked] == [(0, 1), (0, 2), (1, 2)]
        assert ranked[0].score == ranked[1].score

    def test_chain_reaching_below_the_cut(self):
        walk_matrix = self.upper_matrix(4, {(0, 1): 0.4, (1, 2): 0.3 + 5e-13, (0, 3): 0.3,
                                            (0, 2): 0.3 - 5e-13, (1, 3): 0.1})
        us, vs, _ = ConfluenceExtractor.ranked_arrays(walk_matrix)
        assert list(zip(us.tolist(), vs.tolist()))[:4] == [(0, 1), (0, 2), (0, 3), (1, 2)]
        for count, expected in ((2, [(0, 1), (0, 2)]), (3, [(0, 1), (0, 2), (0, 3)])):
            top_us, top_vs, _ = ConfluenceExtractor.select_top(walk_matrix, count)
            assert list(zip(top_us.tolist(), top_vs.tolist())) == expected

    def test_levels_chain_to_the_largest_score(self):
        scores = np.array([0.5, 0.5 + 0.6e-12, 0.5 + 1.2e-12, 0.2])
        levels = ConfluenceExtractor.tie_levels(scores)
        assert levels.tolist() == [0.5 + 1.2e-12] * 3 + [0.2]

    def test_zero_tolerance_keeps_scores_apart(self):
        scores = np.array([0.5, 0.5 + 0.6e-12, 0.5 + 1.2e-12])
        assert ConfluenceExtractor.tie_levels(scores, tolerance=0.0).tolist() == scores.tolist()

    def test_tolerance_setting_is_used(self):
        SettingsManager.set_score_tolerance(0.0)
        walk_matrix = self.upper_matrix(3, {(0, 1): 0.3, (0, 2): 0.3 + 1e-13})
        us, vs, _ = ConfluenceExtractor.ranked_arrays(walk_matrix)
        assert list(zip(us.tolist(), vs.tolist()))[:2] == [(0, 2), (0, 1)]


class TestParams:

    def test_pair_count(self):
        assert ScgParams(10, 3, 30).pair_count == 10

    @pytest.mark.parametrize("m", [3, 17])
    def test_out_of_range(self, m):
        with pytest.raises(ParameterError):
            ScgParams(4, 1, m)

    def test_odd_gap(self):
        with pytest.raises(ParityError):
            ScgParams(4, 1, 7)

    def test_zero_walk(self):
        with pytest.raises(WalkLengthError):
            ScgParams(4, 0, 6)


class TestScg:

    def test_minimum_arc_count_keeps_loops_only(self, path4):
        output = ConfluenceExtractor.scg(path4, 2, 4)
        assert output == Graph(4)

    def test_path_tie_broken_lexicographically(self, path4):
        output = ConfluenceExtractor.scg(path4, 1, 6)
        assert list(output.edges()) == [(0, 1)]
        assert output.arc_count == 6

    def test_maximum_arc_count_is_complete(self, path4):
        assert ConfluenceExtractor.scg(path4, 2, 4 + 4 * 3) == complete_graph(4)

    def test_odd_gap_rejected(self, path4):
        with pytest.raises(ParityError):
            ConfluenceExtractor.scg(path4, 2, 7)

    def test_diagnostics_count_zero_confluences(self, path4):
        result = ConfluenceExtractor.scg_with_diagnostics(path4, 1, 4 + 2 * 4)
        assert result.zero_score_pairs == 1
        assert result.min_selected_score == 0.0
        assert result.params.pair_count == 4

    def test_output_invariants_and_optimality(self, rng):
        graph = random_graph(rng, 30, 0.08)
        t, m = 4, 30 + 2 * 60
        walk_matrix = ConfluenceExtractor.all_pairs_walk_matrix(graph, t)
        output = ConfluenceExtractor.scg(graph, t, m)
        assert output.arc_count == m
        assert output.node_count == graph.node_count
        assert output.check_invariants()

        ranked = ConfluenceExtractor.rank_pairs(walk_matrix)
        selected = [p for p in ranked if output.has_edge(p.u, p.v)]
        unselected = [p for p in ranked if not output.has_edge(p.u, p.v)]
        assert ranked[:len(selected)] == selected
        worst = selected[-1]
        for q in unselected:
            assert worst.score > q.score or (worst.score == q.score and (worst.u, worst.v) < (q.u, q.v))

    def test_matches_brute_force_oracle(self, rng):
        for _ in range(50):
            n = int(rng.integers(2, 16))
            t = int(rng.integers(1, 6))
            graph = random_graph(rng, n, float(rng.uniform(0.1, 0.5)))
            pairs = int(rng.integers(0, n * (n - 1) // 2 + 1))
            m = n + 2 * pairs
            output = ConfluenceExtractor.scg(graph, t, m)
            assert set(output.edges()) == brute_force_scg_edges(graph, t, m)

    def test_directed_argmax_selects_the_same_pairs(self, rng):
        for _ in range(10):
            graph = random_graph(rng, 14, 0.2)
            walk_matrix = ConfluenceExtractor.all_pairs_walk_matrix(graph, 3)
            output = ConfluenceExtractor.scg(graph, 3, 14 + 2 * 20)
            loop = ConfluenceExtractor.directed_argmax_selection(walk_matrix, 20)
            assert set(loop) == set(output.edges())

    def test_deterministic_across_workers(self, rng):
        graph = random_graph(rng, 60, 0.05)
        serial = ConfluenceExtractor.scg(graph, 5, 60 + 2 * 150)
        SettingsManager.set_workers(4)
        SettingsManager.set_row_block_size(8)
        assert ConfluenceExtractor.scg(graph, 5, 60 + 2 * 150) == serial

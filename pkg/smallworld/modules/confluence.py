"""
Confluence extraction module for the Small World toolkit.
Builds the strong confluence graph: the node pairs with the highest mutual
confluence at walk length t, added until the target arc count is reached.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import ParameterError, ParityError
from .graph import Graph
from .message_log import MessageLog, Level
from .random_walk import RandomWalk
from .settings_manager import SettingsManager


@dataclass(frozen=True)
class ScoredPair:
    """Unordered pair u < v with its mutual confluence"""

    u: int
    v: int
    score: float

    def __post_init__(self):
        if not self.u < self.v:
            raise ValueError(f"Scored pair must satisfy u < v, got ({self.u},{self.v})")
        if not 0.0 <= self.score <= 1.0:
            raise ValueError(f"Confluence {self.score} outside [0, 1]")


@dataclass(frozen=True)
class ScgParams:
    """Walk length and target arc count for a graph of n nodes"""

    n: int
    t: int
    m: int

    def __post_init__(self):
        RandomWalk.check_walk_length(self.t)
        if not self.n <= self.m <= self.n * self.n:
            raise ParameterError(f"Target arc count {self.m} outside [{self.n}, {self.n * self.n}]")
        if (self.m - self.n) % 2:
            raise ParityError(f"Target arc count {self.m} minus {self.n} nodes is odd")

    @property
    def pair_count(self):
        """Number of undirected pairs to select"""
        return (self.m - self.n) // 2


@dataclass(frozen=True)
class ScgResult:
    """Strong confluence graph and selection diagnostics"""

    graph: Graph
    params: ScgParams
    zero_score_pairs: int
    min_selected_score: Optional[float]


class ConfluenceExtractor:
    """Ranks node pairs by mutual confluence and extracts the top ones"""

    @staticmethod
    def all_pairs_walk_matrix(graph, t):
        """n x n matrix of ([G]^t)_{u,v}, one walk row per source"""
        walk = RandomWalk(graph)
        t = walk.check_walk_length(t)
        MessageLog.log_message(f"Walking {graph.node_count} rows for t={t} on {graph!r}")
        return walk.walk_rows(np.arange(graph.node_count), t)

    @staticmethod
    def pair_scores(walk_matrix):
        """(u, v, score) arrays over pairs u < v in lexicographic order"""
        walk_matrix = np.asarray(walk_matrix)
        n = walk_matrix.shape[0]
        if walk_matrix.shape != (n, n):
            raise ValueError(f"Walk matrix must be square, got shape {walk_matrix.shape}")
        us, vs = np.triu_indices(n, k=1)
        scores = np.maximum(walk_matrix[us, vs], walk_matrix[vs, us])
        return us, vs, scores

    @staticmethod
    def tie_levels(scores, tolerance=None):
        """Score each pair is ranked by: the largest score of its tie chain.

        Sorted descending, neighbouring scores within `tolerance` of each other
        form one chain, so confluences equal in exact arithmetic but computed
        along different paths always tie.
        """
        if tolerance is None:
            tolerance = SettingsManager.get_score_tolerance()
        scores = np.asarray(scores, dtype=np.float64)
        if len(scores) == 0:
            return scores.copy()
        order = np.argsort(-scores, kind='stable')
        ordered = scores[order]
        starts = np.ones(len(ordered), dtype=bool)
        starts[1:] = ~np.isclose(ordered[1:], ordered[:-1], rtol=0.0, atol=tolerance)
        leader = np.maximum.accumulate(np.where(starts, np.arange(len(ordered)), 0))
        levels = np.empty_like(scores)
        levels[order] = ordered[leader]
        return levels

    @staticmethod
    def _exclusion_mask(n, us, vs, exclude):
        if not exclude:
            return np.ones(len(us), dtype=bool)
        keys = np.array([min(a, b) * n + max(a, b) for a, b in exclude], dtype=np.int64)
        return ~np.isin(us.astype(np.int64) * n + vs, keys)

    @staticmethod
    def _order(us, vs, scores):
        levels = ConfluenceExtractor.tie_levels(scores)
        order = np.lexsort((vs, us, -levels))
        return us[order], vs[order], levels[order]

    @staticmethod
    def ranked_arrays(walk_matrix, exclude=()):
        """All non-excluded pairs by tie level descending, then (u, v) ascending"""
        n = np.asarray(walk_matrix).shape[0]
        us, vs, scores = ConfluenceExtractor.pair_scores(walk_matrix)
        keep = ConfluenceExtractor._exclusion_mask(n, us, vs, exclude)
        return ConfluenceExtractor._order(us[keep], vs[keep], scores[keep])

    @staticmethod
    def rank_pairs(walk_matrix, exclude=()):
        """Ordered list of scored pairs"""
        us, vs, scores = ConfluenceExtractor.ranked_arrays(walk_matrix, exclude)
        return [ScoredPair(int(u), int(v), float(s)) for u, v, s in zip(us, vs, scores)]

    @staticmethod
    def select_top(walk_matrix, count, exclude=()):
        """The first `count` pairs of the ranking, without sorting all pairs"""
        n = np.asarray(walk_matrix).shape[0]
        us, vs, scores = ConfluenceExtractor.pair_scores(walk_matrix)
        keep = ConfluenceExtractor._exclusion_mask(n, us, vs, exclude)
        us, vs, scores = us[keep], vs[keep], scores[keep]
        if count > len(scores):
            raise ParameterError(f"Cannot select {count} pairs out of {len(scores)}")
        if count == 0:
            return us[:0], vs[:0], scores[:0]

        if count < len(scores):
            tolerance = SettingsManager.get_score_tolerance()
            cut = len(scores) - count
            floor = np.partition(scores, cut)[cut]
            # Follow the tie chain of the cut score down until a real gap
            while True:
                below = scores[scores < floor]
                if len(below) == 0 or floor - below.max() > tolerance:
                    break
                floor = below.max()
            chosen = np.flatnonzero(scores >= floor)
            us, vs, scores = us[chosen], vs[chosen], scores[chosen]
        us, vs, levels = ConfluenceExtractor._order(us, vs, scores)
        return us[:count], vs[:count], levels[:count]

    @staticmethod
    def directed_argmax_selection(walk_matrix, count, tolerance=None):
        """Pairs picked one at a time by the largest directed entry not yet linked"""
        if tolerance is None:
            tolerance = SettingsManager.get_score_tolerance()
        directed = np.array(walk_matrix, dtype=np.float64)
        np.fill_diagonal(directed, -1.0)
        selected = []
        for _ in range(count):
            best = directed.max()
            rows, cols = np.nonzero(np.isclose(directed, best, rtol=0.0, atol=tolerance))
            u, v = min((min(r, c), max(r, c)) for r, c in zip(rows, cols))
            selected.append((int(u), int(v)))
            directed[u, v] = directed[v, u] = -1.0
        return selected

    @staticmethod
    def scg_with_diagnostics(graph, t, m, walk_matrix=None):
        """Strong confluence graph of `graph` at walk length t with m arcs"""
        params = ScgParams(graph.node_count, t, m)
        if walk_matrix is None:
            walk_matrix = ConfluenceExtractor.all_pairs_walk_matrix(graph, params.t)

        us, vs, scores = ConfluenceExtractor.select_top(walk_matrix, params.pair_count)
        order = np.lexsort((vs, us))
        output = Graph.from_edges(graph.node_count, zip(us[order].tolist(), vs[order].tolist()))

        zero_pairs = int((scores == 0).sum())
        min_score = float(scores[-1]) if len(scores) else None
        if zero_pairs:
            MessageLog.log_message(
                f"{zero_pairs} of {params.pair_count} selected pairs have zero confluence "
                f"at t={params.t}; consider a longer walk", level=Level.WARNING)
        MessageLog.log_message(
            f"Extracted strong confluence graph {output!r} at t={params.t}", level=Level.SUCCESS)
        return ScgResult(output, params, zero_pairs, min_score)

    @staticmethod
    def scg(graph, t, m):
        """Strong confluence graph only"""
        return ConfluenceExtractor.scg_with_diagnostics(graph, t, m).graph

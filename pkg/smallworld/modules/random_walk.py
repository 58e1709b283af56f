"""
Random walk module for the Small World toolkit.
Handles the lazy walk on reflexive graphs: steps, t-step rows, the
stationary limit and mutual confluence.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import ClassVar

import numpy as np
import scipy.sparse as sp

from .errors import (DimensionError, NodeIndexError, NotConnectedError,
                     PairError, WalkLengthError)
from .graph import StructureAnalyzer
from .message_log import MessageLog
from .settings_manager import SettingsManager


@dataclass(frozen=True)
class ProbabilityVector:
    """A distribution over the nodes of a graph"""

    values: np.ndarray
    TOLERANCE: ClassVar[float] = 1e-9

    def __post_init__(self):
        values = np.array(self.values, dtype=np.float64)
        if values.ndim != 1 or len(values) == 0:
            raise DimensionError(f"A probability vector is a non-empty 1-d array, got shape {values.shape}")
        if (values < 0).any():
            raise ValueError("Probability vector has negative entries")
        total = values.sum()
        if abs(total - 1.0) > self.TOLERANCE:
            raise ValueError(f"Probability vector sums to {total!r}, not 1")
        values.setflags(write=False)
        object.__setattr__(self, 'values', values)

    @classmethod
    def delta(cls, n, u):
        """Certainty of being on node u"""
        if not 0 <= u < n:
            raise NodeIndexError(f"Node {u} out of range for {n} nodes")
        values = np.zeros(n)
        values[u] = 1.0
        return cls(values)

    @property
    def dimension(self):
        return len(self.values)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, v):
        return float(self.values[v])


@dataclass(frozen=True)
class ConfluenceSeries:
    """Both directed t-step probabilities of a pair for t = 1..T"""

    source: int
    target: int
    forward: np.ndarray
    backward: np.ndarray
    asymptote: float

    @property
    def length(self):
        return len(self.forward)

    def rows(self):
        """(t, p_uv, p_vu, asymptote) per step"""
        for t, (p_uv, p_vu) in enumerate(zip(self.forward, self.backward), start=1):
            yield t, float(p_uv), float(p_vu), self.asymptote

    def above_asymptote(self):
        """Steps t where the forward probability exceeds the asymptote"""
        return [t for t, p_uv, _, asym in self.rows() if p_uv > asym]


class RandomWalk:
    """Lazy random walk on a reflexive symmetric graph.

    The transition matrix is never formed densely: one step accumulates,
    for every target v, p(u) / deg(u) over u in v's closed neighborhood,
    by ascending u.
    """

    def __init__(self, graph):
        self.graph = graph
        n = graph.node_count
        self.degrees = graph.degrees()
        closed = graph.adjacency_matrix() + sp.identity(n, format='csr')
        self._transpose = sp.csr_matrix(closed @ sp.diags(1.0 / self.degrees))
        self._transpose.sort_indices()

    @staticmethod
    def check_walk_length(t):
        if int(t) != t or t < 1:
            raise WalkLengthError(f"Walk length must be a positive integer, got {t}")
        return int(t)

    def _check_node(self, u):
        if not 0 <= u < self.graph.node_count:
            raise NodeIndexError(
                f"Node {u} out of range for a graph with {self.graph.node_count} nodes")

    def step(self, p):
        """One step of the walk from distribution p"""
        if p.dimension != self.graph.node_count:
            raise DimensionError(
                f"Distribution over {p.dimension} nodes on a graph with {self.graph.node_count}")
        return ProbabilityVector(self._transpose @ p.values)

    def _advance_block(self, rows, steps):
        # Column c of the product only ever reads column c, so a row's values
        # do not depend on which block it travels in
        columns = np.array(rows, dtype=np.float64).T
        for _ in range(steps):
            columns = self._transpose @ columns
        return np.ascontiguousarray(columns.T)

    def advance(self, rows, steps=1):
        """Advance every row (a distribution) of a k x n array by the given steps"""
        rows = np.atleast_2d(rows)
        if steps == 0:
            return np.array(rows, dtype=np.float64)
        block = SettingsManager.get_row_block_size()
        chunks = [rows[start:start + block] for start in range(0, len(rows), block)]
        workers = SettingsManager.get_workers()
        if workers > 1 and len(chunks) > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                parts = list(pool.map(lambda c: self._advance_block(c, steps), chunks))
        else:
            parts = [self._advance_block(c, steps) for c in chunks]
        return np.vstack(parts)

    def walk_rows(self, sources, t):
        """Rows ([G]^t)_{u,.} for each source u"""
        t = self.check_walk_length(t)
        sources = np.asarray(sources, dtype=np.int64)
        for u in sources:
            self._check_node(u)
        start = np.zeros((len(sources), self.graph.node_count))
        start[np.arange(len(sources)), sources] = 1.0
        return self.advance(start, t)

    def walk_distribution(self, u, t):
        """Distribution after a walk of length t started on u"""
        t = self.check_walk_length(t)
        self._check_node(u)
        return ProbabilityVector(self.walk_rows([u], t)[0])

    def stationary_distribution(self):
        """Limit distribution, proportional to loop-inclusive degree"""
        return ProbabilityVector(self.degrees / self.degrees.sum())

    def confluence(self, u, v, t):
        """Mutual confluence max(([G]^t)_{u,v}, ([G]^t)_{v,u})"""
        t = self.check_walk_length(t)
        self._check_node(u)
        self._check_node(v)
        if u == v:
            raise PairError(f"Confluence needs two distinct nodes, got ({u},{v})")
        rows = self.walk_rows([u, v], t)
        return float(max(rows[0, v], rows[1, u]))

    def confluence_series(self, u, v, steps):
        """Directed probabilities between u and v for t = 1..steps"""
        steps = self.check_walk_length(steps)
        self._check_node(u)
        self._check_node(v)
        if u == v:
            raise PairError(f"Confluence series needs two distinct nodes, got ({u},{v})")
        if not StructureAnalyzer.is_connected(self.graph):
            raise NotConnectedError("Confluence series are defined on connected graphs only")

        forward = np.empty(steps)
        backward = np.empty(steps)
        rows = self.walk_rows([u, v], 1)
        for index in range(steps):
            if index:
                rows = self._advance_block(rows, 1)
            forward[index] = rows[0, v]
            backward[index] = rows[1, u]
        asymptote = float(self.degrees[v] / self.degrees.sum())
        MessageLog.log_message(
            f"Confluence series ({u},{v}) over {steps} steps, asymptote {asymptote:.6g}")
        return ConfluenceSeries(int(u), int(v), forward, backward, asymptote)

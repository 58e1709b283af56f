"""
Pipeline module for the Small World toolkit.
Random graph generation, the make-small-world pipeline, walk-length sweeps
and the confluence-curve experiment.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict

import numpy as np

from .confluence import ConfluenceExtractor, ScgParams
from .errors import NotConnectedError, OverfullError, PairError, ParameterError, ParityError
from .graph import Graph, StructureAnalyzer
from .message_log import MessageLog, Level
from .random_walk import RandomWalk
from .settings_manager import SettingsManager
from .sw_metrics import SmallWorldMetrics

LCC_FRACTION_WARNING = 0.8


@dataclass(frozen=True)
class MakeswParams:
    """Inputs of the make-small-world pipeline"""

    n: int
    m_in: int
    t: int
    m: int
    seed: int

    def __post_init__(self):
        ErGenerator.check_arc_count(self.n, self.m_in, 'input')
        ScgParams(self.n, self.t, self.m)
        if self.seed < 0 or self.seed >= 2 ** 64:
            raise ParameterError(f"Seed {self.seed} is not a 64-bit unsigned integer")


@dataclass(frozen=True)
class Provenance:
    """How a makesw graph was produced"""

    params: MakeswParams
    full_arc_count: int
    lcc_nodes: int
    lcc_fraction: float
    zero_score_pairs: int
    node_mapping: Dict[int, int] = field(repr=False)

    def to_dict(self):
        return {
            'seed': self.params.seed,
            'n': self.params.n,
            'm_in': self.params.m_in,
            't': self.params.t,
            'm': self.params.m,
            'full_arc_count': self.full_arc_count,
            'lcc_nodes': self.lcc_nodes,
            'lcc_fraction': self.lcc_fraction,
            'zero_score_pairs': self.zero_score_pairs,
        }


@dataclass(frozen=True)
class MakeswResult:
    """Largest component of the strong confluence graph, plus the full graph"""

    graph: Graph
    full_graph: Graph
    provenance: Provenance


@dataclass(frozen=True)
class SweepRecord:
    """Small-world report of one (walk length, seed) run"""

    t: int
    seed: int
    report: object

    FIELDS = ('t', 'seed', 'n', 'm', 'lcc_fraction', 'diameter', 'avg_path_len',
              'clustering', 'slope', 'r2', 'verdict')

    def to_dict(self):
        record = {'t': self.t, 'seed': self.seed}
        report = self.report.to_dict()
        record.update({key: report[key] for key in self.FIELDS[2:]})
        return record


class ErGenerator:
    """Erdos-Renyi G(n, M) graphs with a fixed number of edges.

    Randomness comes from numpy's PCG64 bit generator seeded with the
    given seed; the same seed always gives the same edge list.
    """

    @staticmethod
    def check_arc_count(n, arcs, label='target'):
        """Validate n <= arcs <= n^2 with arcs - n even; returns the edge count"""
        if n < 1:
            raise ParameterError(f"Node count must be at least 1, got {n}")
        if arcs < n:
            raise ParameterError(f"The {label} arc count {arcs} is below the node count {n}")
        if (arcs - n) % 2:
            raise ParityError(f"The {label} arc count {arcs} minus {n} nodes is odd")
        edges = (arcs - n) // 2
        if edges > n * (n - 1) // 2:
            raise OverfullError(
                f"The {label} arc count {arcs} needs {edges} edges; {n} nodes have only "
                f"{n * (n - 1) // 2} pairs")
        return edges

    @staticmethod
    def rng(seed):
        return np.random.Generator(np.random.PCG64(seed))

    @staticmethod
    def er_graph(n, m_in, seed):
        """Uniform random graph with exactly (m_in - n) / 2 non-loop edges"""
        edges = ErGenerator.check_arc_count(n, m_in, 'input')
        if seed < 0:
            raise ParameterError(f"Seed must be non-negative, got {seed}")
        rng = ErGenerator.rng(seed)
        total = n * (n - 1) // 2

        if 2 * edges > total:
            # Dense request: a shuffled prefix of all pairs beats rejection
            us, vs = np.triu_indices(n, k=1)
            picked = rng.permutation(total)[:edges]
            keys = us[picked].astype(np.int64) * n + vs[picked]
        else:
            seen = set()
            ordered = []
            while len(ordered) < edges:
                draws = rng.integers(0, n, size=(2 * (edges - len(ordered)) + 16, 2))
                for a, b in draws.tolist():
                    if a == b:
                        continue
                    key = min(a, b) * n + max(a, b)
                    if key not in seen:
                        seen.add(key)
                        ordered.append(key)
                        if len(ordered) == edges:
                            break
            keys = np.array(ordered, dtype=np.int64)

        keys = np.sort(keys)
        graph = Graph.from_edges(n, zip((keys // n).tolist(), (keys % n).tolist()))
        MessageLog.log_message(f"Generated random graph {graph!r} with seed {seed}")
        return graph


class PipelineManager:
    """Manager class for the generation pipeline and experiments"""

    @staticmethod
    def _finish(params, g_in, walk_matrix=None):
        result = ConfluenceExtractor.scg_with_diagnostics(g_in, params.t, params.m, walk_matrix)
        full = result.graph
        lcc, mapping = StructureAnalyzer.largest_component_subgraph(full)
        fraction = lcc.node_count / full.node_count
        if fraction <= LCC_FRACTION_WARNING:
            MessageLog.log_message(
                f"Largest component keeps only {fraction:.1%} of the nodes "
                f"(t={params.t}, seed={params.seed})", level=Level.WARNING)
        provenance = Provenance(params, full.arc_count, lcc.node_count, fraction,
                                result.zero_score_pairs, mapping)
        return MakeswResult(lcc, full, provenance)

    @staticmethod
    def makesw(params):
        """Random graph -> strong confluence graph -> largest connected component"""
        MessageLog.log_message(
            f"makesw n={params.n} m_in={params.m_in} t={params.t} m={params.m} seed={params.seed}")
        g_in = ErGenerator.er_graph(params.n, params.m_in, params.seed)
        result = PipelineManager._finish(params, g_in)
        MessageLog.log_message(
            f"makesw produced {result.graph!r} ({result.provenance.lcc_fraction:.1%} of nodes)",
            level=Level.SUCCESS)
        return result

    @staticmethod
    def _sweep_seed(n, m_in, m, t_values, seed):
        params = [MakeswParams(n, m_in, t, m, seed) for t in t_values]
        g_in = ErGenerator.er_graph(n, m_in, seed)
        walk = RandomWalk(g_in)
        rows = np.eye(n)
        current = 0
        records = []
        for p in params:
            # One pass over the walk rows per new step, shared by every t
            rows = walk.advance(rows, p.t - current)
            current = p.t
            result = PipelineManager._finish(p, g_in, rows)
            report = SmallWorldMetrics.small_world_check(result.graph,
                                                         result.provenance.lcc_fraction)
            records.append(SweepRecord(p.t, seed, report))
        MessageLog.log_message(f"Sweep finished for seed {seed}")
        return records

    @staticmethod
    def sweep(n, m_in, m, t_values, seeds):
        """One small-world report per (t, seed), ordered by t then seed"""
        t_values = sorted(set(int(t) for t in t_values))
        seeds = [int(s) for s in seeds]
        if not t_values:
            raise ParameterError("The walk-length range is empty")
        if not seeds:
            raise ParameterError("At least one seed is required")
        if len(set(seeds)) != len(seeds):
            raise ParameterError(f"Duplicate seeds in {seeds}")
        for t in t_values:
            RandomWalk.check_walk_length(t)

        MessageLog.log_message(
            f"Sweep n={n} m_in={m_in} m={m} over t={t_values[0]}..{t_values[-1]} "
            f"and {len(seeds)} seed(s)")
        workers = SettingsManager.get_workers()
        if workers > 1 and len(seeds) > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                per_seed = list(pool.map(
                    lambda s: PipelineManager._sweep_seed(n, m_in, m, t_values, s), seeds))
        else:
            per_seed = [PipelineManager._sweep_seed(n, m_in, m, t_values, s) for s in seeds]

        records = [record for batch in per_seed for record in batch]
        records.sort(key=lambda r: (r.t, r.seed))
        return records

    @staticmethod
    def confluence_experiment(graph, u, v1, v2, steps):
        """Confluence series from u towards v1 and towards v2"""
        if len({u, v1, v2}) != 3:
            raise PairError(f"The experiment needs three distinct nodes, got ({u},{v1},{v2})")
        if not StructureAnalyzer.is_connected(graph):
            raise NotConnectedError("The confluence experiment needs a connected graph")
        if graph.degree(v1) != graph.degree(v2):
            MessageLog.log_message(
                f"Targets {v1} and {v2} have degrees {graph.degree(v1)} and {graph.degree(v2)}; "
                f"their asymptotes differ", level=Level.WARNING)
        walk = RandomWalk(graph)
        return walk.confluence_series(u, v1, steps), walk.confluence_series(u, v2, steps)

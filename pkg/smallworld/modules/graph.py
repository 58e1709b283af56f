"""
Graph module for the Small World toolkit.
Reflexive, symmetric graphs and their structural metrics.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp
from scipy.sparse import csgraph

from .errors import (DuplicateEdgeError, GraphSizeError, LoopInsertError,
                     NodeIndexError, NotConnectedError)
from .message_log import MessageLog, Level
from .settings_manager import SettingsManager


class Graph:
    """Reflexive, symmetric graph on nodes 0..n-1.

    Self-loops are implicit: every node has one, none is stored. The arc
    count m counts each loop once and each undirected edge twice.
    """

    def __init__(self, node_count):
        node_count = int(node_count)
        if node_count < 1:
            raise GraphSizeError(f"A graph needs at least one node, got {node_count}")
        self._adjacency = [set() for _ in range(node_count)]
        self._edge_count = 0
        self._csr = None

    @classmethod
    def new_graph(cls, n):
        """Graph with n nodes and no non-loop edges"""
        return cls(n)

    @classmethod
    def from_edges(cls, n, edges):
        """Graph with n nodes and the given undirected edges"""
        graph = cls(n)
        for u, v in edges:
            graph.add_undirected_edge(u, v)
        return graph

    @property
    def node_count(self):
        return len(self._adjacency)

    @property
    def edge_count(self):
        """Number of stored undirected non-loop edges"""
        return self._edge_count

    @property
    def arc_count(self):
        return self.node_count + 2 * self._edge_count

    def _check_node(self, u):
        if not 0 <= u < self.node_count:
            raise NodeIndexError(f"Node {u} out of range for a graph with {self.node_count} nodes")

    def add_undirected_edge(self, u, v):
        """Add the edge {u, v} in both directions"""
        u, v = int(u), int(v)
        self._check_node(u)
        self._check_node(v)
        if u == v:
            raise LoopInsertError(f"Self-loop ({u},{u}) is implicit and cannot be added")
        if v in self._adjacency[u]:
            raise DuplicateEdgeError(f"Edge ({min(u, v)},{max(u, v)}) already present")
        self._adjacency[u].add(v)
        self._adjacency[v].add(u)
        self._edge_count += 1
        self._csr = None
        return self

    def has_edge(self, u, v):
        self._check_node(u)
        self._check_node(v)
        return u == v or v in self._adjacency[u]

    def neighbors(self, u):
        """Sorted non-loop neighbors of u"""
        self._check_node(u)
        return sorted(self._adjacency[u])

    def degree(self, u):
        """Degree of u, its self-loop included"""
        self._check_node(u)
        return 1 + len(self._adjacency[u])

    def nonloop_degree(self, u):
        """Degree of u without its self-loop"""
        self._check_node(u)
        return len(self._adjacency[u])

    def degrees(self):
        """Loop-inclusive degrees of all nodes"""
        return np.fromiter((1 + len(a) for a in self._adjacency), dtype=np.int64,
                           count=self.node_count)

    def nonloop_degrees(self):
        return self.degrees() - 1

    def edges(self):
        """Undirected edges as (u, v) with u < v, in lexicographic order"""
        for u, adjacent in enumerate(self._adjacency):
            for v in sorted(adjacent):
                if u < v:
                    yield u, v

    def adjacency_matrix(self):
        """Loop-free symmetric adjacency as a CSR matrix with sorted indices"""
        if self._csr is None:
            n = self.node_count
            indptr = np.zeros(n + 1, dtype=np.int32)
            indptr[1:] = np.cumsum([len(a) for a in self._adjacency])
            indices = np.fromiter(
                (v for adjacent in self._adjacency for v in sorted(adjacent)),
                dtype=np.int32, count=int(indptr[-1]))
            data = np.ones(len(indices), dtype=np.float64)
            self._csr = sp.csr_matrix((data, indices, indptr), shape=(n, n))
        return self._csr

    def check_invariants(self):
        """Raise AssertionError if symmetry, loop-freedom or arc accounting is broken"""
        total = 0
        for u, adjacent in enumerate(self._adjacency):
            assert u not in adjacent, f"stored self-loop on {u}"
            for v in adjacent:
                assert 0 <= v < self.node_count, f"neighbor {v} of {u} out of range"
                assert u in self._adjacency[v], f"edge ({u},{v}) is not symmetric"
            total += len(adjacent)
        assert total % 2 == 0
        assert self.arc_count == self.node_count + total
        return True

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adjacency == other._adjacency

    def __repr__(self):
        return f"Graph(n={self.node_count}, m={self.arc_count})"


@dataclass(frozen=True)
class ComponentLabeling:
    """Connected-component ids per node, numbered by smallest member"""

    component_ids: np.ndarray
    sizes: np.ndarray
    largest: int

    @property
    def count(self):
        return len(self.sizes)

    def members(self, component_id):
        return np.flatnonzero(self.component_ids == component_id)


class StructureAnalyzer:
    """Structural metrics of reflexive symmetric graphs"""

    @staticmethod
    def connected_components(graph):
        """Label connected components; ids follow the smallest node of each component"""
        _, raw = csgraph.connected_components(graph.adjacency_matrix(), directed=False)
        _, first_seen, inverse = np.unique(raw, return_index=True, return_inverse=True)
        order = np.argsort(first_seen, kind='stable')
        relabel = np.empty_like(order)
        relabel[order] = np.arange(len(order))
        ids = relabel[inverse].astype(np.int64)
        sizes = np.bincount(ids, minlength=len(order))
        # argmax returns the first maximum, i.e. the smallest id on ties
        return ComponentLabeling(ids, sizes, int(np.argmax(sizes)))

    @staticmethod
    def is_connected(graph):
        return StructureAnalyzer.connected_components(graph).count == 1

    @staticmethod
    def induced_subgraph(graph, nodes):
        """Subgraph induced by sorted nodes, renumbered contiguously; returns (graph, old->new)"""
        nodes = sorted(int(u) for u in nodes)
        mapping = {old: new for new, old in enumerate(nodes)}
        subgraph = Graph(len(nodes))
        for u, v in graph.edges():
            if u in mapping and v in mapping:
                subgraph.add_undirected_edge(mapping[u], mapping[v])
        return subgraph, mapping

    @staticmethod
    def largest_component_subgraph(graph):
        """Induced subgraph on the largest connected component"""
        labeling = StructureAnalyzer.connected_components(graph)
        if labeling.count == 1:
            return graph, {u: u for u in range(graph.node_count)}
        return StructureAnalyzer.induced_subgraph(graph, labeling.members(labeling.largest))

    @staticmethod
    def component_summary(graph):
        """(component count, largest component size, fraction of nodes in it)"""
        labeling = StructureAnalyzer.connected_components(graph)
        largest_size = int(labeling.sizes[labeling.largest])
        return labeling.count, largest_size, largest_size / graph.node_count

    @staticmethod
    def bfs_distances(graph, source):
        """Hop distances from source; unreachable nodes get inf"""
        if not 0 <= source < graph.node_count:
            raise NodeIndexError(
                f"Node {source} out of range for a graph with {graph.node_count} nodes")
        return csgraph.shortest_path(graph.adjacency_matrix(), directed=False,
                                     unweighted=True, indices=int(source))

    @staticmethod
    def _distance_block(matrix, sources):
        distances = csgraph.shortest_path(matrix, directed=False, unweighted=True,
                                          indices=sources)
        return float(distances.max()), float(distances.sum())

    @staticmethod
    def path_statistics(graph):
        """(diameter, average path length) of a connected graph by all-sources BFS"""
        if not StructureAnalyzer.is_connected(graph):
            raise NotConnectedError(
                "Path statistics need a connected graph; take the largest component first")
        n = graph.node_count
        if n == 1:
            return 0, 0.0

        matrix = graph.adjacency_matrix()
        block = SettingsManager.get_row_block_size()
        blocks = [np.arange(start, min(start + block, n)) for start in range(0, n, block)]
        workers = SettingsManager.get_workers()
        if workers > 1 and len(blocks) > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(lambda s: StructureAnalyzer._distance_block(matrix, s),
                                        blocks))
        else:
            results = [StructureAnalyzer._distance_block(matrix, s) for s in blocks]

        diameter = int(max(r[0] for r in results))
        # Distances are integers, so block sums add up exactly in any order
        total = sum(r[1] for r in results)
        return diameter, total / (n * (n - 1))

    @staticmethod
    def diameter(graph):
        """Maximum eccentricity of a connected graph"""
        return StructureAnalyzer.path_statistics(graph)[0]

    @staticmethod
    def average_path_length(graph):
        """Mean hop distance over unordered pairs of distinct nodes"""
        return StructureAnalyzer.path_statistics(graph)[1]

    @staticmethod
    def local_clustering(graph):
        """Per-node clustering coefficient; nan where the non-loop degree is below 2"""
        adjacency = graph.adjacency_matrix()
        links = np.asarray((adjacency @ adjacency).multiply(adjacency).sum(axis=1)).ravel() / 2.0
        degrees = graph.nonloop_degrees().astype(np.float64)
        pairs = degrees * (degrees - 1) / 2.0
        local = np.full(graph.node_count, np.nan)
        qualified = degrees >= 2
        local[qualified] = links[qualified] / pairs[qualified]
        return local

    @staticmethod
    def clustering_coefficient(graph):
        """Mean local clustering over nodes with at least two non-loop neighbors"""
        local = StructureAnalyzer.local_clustering(graph)
        qualified = ~np.isnan(local)
        if not qualified.any():
            MessageLog.log_message(
                f"No node of {graph!r} has two neighbors; clustering is 0", level=Level.INFO)
            return 0.0
        return float(local[qualified].mean())

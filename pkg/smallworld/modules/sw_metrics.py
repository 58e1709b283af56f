"""
Small-world metrics module for the Small World toolkit.
Degree distributions, log-log least-squares fits, Erdos-Renyi reference
values and the four-criteria small-world check.
"""

import math
from dataclasses import dataclass
from typing import Dict, Optional

import numpy as np
from scipy import stats

from .errors import (DegenerateDensityError, DomainError, InsufficientDataError,
                     NotConnectedError, ParameterError)
from .graph import StructureAnalyzer
from .message_log import MessageLog, Level


@dataclass(frozen=True)
class DegreeHistogram:
    """Node count per non-loop degree"""

    counts: Dict[int, int]

    @property
    def node_count(self):
        return sum(self.counts.values())

    @property
    def max_degree(self):
        return max(self.counts) if self.counts else 0

    def items(self):
        return sorted(self.counts.items())


@dataclass(frozen=True)
class PowerLawFit:
    """Least-squares line through log10(count) against log10(degree)"""

    slope: float
    intercept: float
    r2: float
    points_used: int

    @property
    def lambda_(self):
        """Decay exponent, the absolute slope"""
        return abs(self.slope)


@dataclass(frozen=True)
class ErReference:
    """Average path length and clustering expected of a same-density random graph"""

    ell_rand: float
    c_rand: float
    d: float


@dataclass(frozen=True)
class ErComparison:
    """A graph's path length and clustering relative to its random reference"""

    reference: ErReference
    ell_ratio: float
    clustering_ratio: float

    def to_dict(self):
        return {
            'ell_rand': self.reference.ell_rand,
            'c_rand': self.reference.c_rand,
            'd': self.reference.d,
            'ell_ratio': self.ell_ratio,
            'clustering_ratio': self.clustering_ratio,
        }


@dataclass(frozen=True)
class SmallWorldReport:
    """The four small-world criteria evaluated on one connected graph"""

    n: int
    m: int
    lcc_fraction: float
    diameter: int
    avg_path_length: float
    clustering: float
    fit: Optional[PowerLawFit]
    ok_sparsity: bool
    ok_diameter: bool
    ok_clustering: bool
    ok_heavytail: bool

    FIELDS = ('n', 'm', 'lcc_fraction', 'diameter', 'avg_path_len', 'clustering', 'slope',
              'r2', 'ok_sparsity', 'ok_diameter', 'ok_clustering', 'ok_heavytail', 'verdict')

    @property
    def verdict(self):
        return self.ok_sparsity and self.ok_diameter and self.ok_clustering and self.ok_heavytail

    @property
    def slope(self):
        return self.fit.slope if self.fit else None

    @property
    def r2(self):
        return self.fit.r2 if self.fit else None

    def to_dict(self):
        """Flat record keyed by the report field names"""
        return {
            'n': self.n,
            'm': self.m,
            'lcc_fraction': self.lcc_fraction,
            'diameter': self.diameter,
            'avg_path_len': self.avg_path_length,
            'clustering': self.clustering,
            'slope': self.slope,
            'r2': self.r2,
            'ok_sparsity': self.ok_sparsity,
            'ok_diameter': self.ok_diameter,
            'ok_clustering': self.ok_clustering,
            'ok_heavytail': self.ok_heavytail,
            'verdict': self.verdict,
        }


class SmallWorldMetrics:
    """Degree statistics, reference values and the small-world classifier"""

    HEAVY_TAIL_MIN_LAMBDA = 1.0
    HEAVY_TAIL_MIN_R2 = 0.8

    @staticmethod
    def degree_distribution(graph):
        """Histogram of non-loop degrees"""
        degrees, counts = np.unique(graph.nonloop_degrees(), return_counts=True)
        return DegreeHistogram({int(k): int(c) for k, c in zip(degrees, counts)})

    @staticmethod
    def power_law_fit(histogram):
        """Ordinary least squares of log10(count) on log10(k) over bins with k, count >= 1"""
        points = [(k, c) for k, c in histogram.items() if k >= 1 and c >= 1]
        if len(points) < 2:
            raise InsufficientDataError(
                f"A power-law fit needs two degree bins with k >= 1, got {len(points)}")

        x = np.log10([k for k, _ in points])
        y = np.log10([c for _, c in points])
        result = stats.linregress(x, y)
        if np.ptp(y) == 0:
            # Flat data lies exactly on the fitted line
            r2 = 1.0
        else:
            r2 = float(result.rvalue) ** 2
        return PowerLawFit(float(result.slope), float(result.intercept), min(r2, 1.0), len(points))

    @staticmethod
    def er_reference(n, m):
        """Reference path length log(n)/log(d) and clustering p for d = (m - n)/n"""
        if m <= n:
            raise DegenerateDensityError(
                f"Arc count {m} leaves no non-loop edges on {n} nodes")
        d = (m - n) / n
        ell_rand = math.log(n) / math.log(d) if d != 1 else math.inf
        c_rand = (m - n) / (n * (n - 1))
        return ErReference(ell_rand, c_rand, d)

    @staticmethod
    def er_degree_pmf(n, p, k):
        """Probability that a node of a G(n, p) graph has k neighbors"""
        if not 0.0 <= p <= 1.0:
            raise DomainError(f"Edge probability {p} outside [0, 1]")
        if not 0 <= k <= n - 1:
            raise DomainError(f"Degree {k} outside [0, {n - 1}]")
        return float(stats.binom.pmf(k, n - 1, p))

    @staticmethod
    def degree_table(graph):
        """(k, observed count, expected count in a same-density random graph) for k = 0..max"""
        n, m = graph.node_count, graph.arc_count
        p = (m - n) / (n * (n - 1)) if n > 1 else 0.0
        histogram = SmallWorldMetrics.degree_distribution(graph)
        ks = np.arange(histogram.max_degree + 1)
        expected = n * stats.binom.pmf(ks, n - 1, p)
        return [(int(k), histogram.counts.get(int(k), 0), float(e)) for k, e in zip(ks, expected)]

    @staticmethod
    def small_world_check(graph, lcc_fraction=1.0):
        """Evaluate sparsity, diameter, clustering and heavy tail on a connected graph"""
        if not 0.0 < lcc_fraction <= 1.0:
            raise ParameterError(f"Component fraction {lcc_fraction} outside (0, 1]")
        if not StructureAnalyzer.is_connected(graph):
            raise NotConnectedError(
                "The small-world check needs a connected graph; take the largest component first")

        n, m = graph.node_count, graph.arc_count
        diameter, avg_path_length = StructureAnalyzer.path_statistics(graph)
        clustering = StructureAnalyzer.clustering_coefficient(graph)
        try:
            fit = SmallWorldMetrics.power_law_fit(SmallWorldMetrics.degree_distribution(graph))
        except InsufficientDataError as e:
            MessageLog.log_message(f"No heavy-tail fit: {e}", level=Level.WARNING)
            fit = None

        log_n = math.log(n)
        report = SmallWorldReport(
            n=n,
            m=m,
            lcc_fraction=float(lcc_fraction),
            diameter=int(diameter),
            avg_path_length=float(avg_path_length),
            clustering=float(clustering),
            fit=fit,
            ok_sparsity=m <= 10 * n * log_n,
            ok_diameter=diameter < 3 * log_n,
            ok_clustering=clustering > 10 * m / (n * n),
            ok_heavytail=(fit is not None and fit.slope < 0
                          and fit.lambda_ > SmallWorldMetrics.HEAVY_TAIL_MIN_LAMBDA
                          and fit.r2 > SmallWorldMetrics.HEAVY_TAIL_MIN_R2),
        )
        MessageLog.log_message(
            f"Small-world check n={n} m={m}: L={diameter} ell={avg_path_length:.4g} "
            f"C={clustering:.4g} verdict={report.verdict}")
        return report

    @staticmethod
    def er_comparison(report):
        """Compare a report with the random graph of identical n and m"""
        reference = SmallWorldMetrics.er_reference(report.n, report.m)
        if reference.d == 1:
            raise DegenerateDensityError("Density d = 1 gives no finite reference path length")
        return ErComparison(
            reference=reference,
            ell_ratio=report.avg_path_length / reference.ell_rand,
            clustering_ratio=report.clustering / reference.c_rand,
        )

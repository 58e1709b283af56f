import dataclasses
import math

import numpy as np
import pytest

from smallworld.modules.errors import (DegenerateDensityError, DomainError,
                                       InsufficientDataError, NotConnectedError)
from smallworld.modules.graph import Graph
from smallworld.modules.sw_metrics import DegreeHistogram, SmallWorldMetrics

from oracles import complete_graph


class TestDegreeDistribution:

    def test_loops_only(self):
        assert SmallWorldMetrics.degree_distribution(Graph(5)).counts == {0: 5}

    def test_path(self, path4):
        assert SmallWorldMetrics.degree_distribution(path4).counts == {1: 2, 2: 2}

    def test_complete(self):
        histogram = SmallWorldMetrics.degree_distribution(complete_graph(4))
        assert histogram.counts == {3: 4}
        assert histogram.node_count == 4


class TestPowerLawFit:

    def test_exact_power_law(self):
        fit = SmallWorldMetrics.power_law_fit(DegreeHistogram({1: 400, 2: 100, 4: 25}))
        assert fit.slope == pytest.approx(-2.0, abs=1e-9)
        assert fit.r2 == pytest.approx(1.0, abs=1e-12)
        assert fit.lambda_ == pytest.approx(2.0)
        assert fit.points_used == 3

    def test_flat_two_points(self):
        fit = SmallWorldMetrics.power_law_fit(DegreeHistogram({1: 1000, 10: 1000}))
        assert fit.slope == 0.0
        assert fit.r2 == 1.0
        assert fit.lambda_ == 0.0

    def test_recovers_planted_slope(self):
        counts = {k: round(1e6 * k ** -2.5) for k in range(1, 31)}
        fit = SmallWorldMetrics.power_law_fit(DegreeHistogram(counts))
        assert fit.slope == pytest.approx(-2.5, abs=0.05)
        assert fit.r2 > 0.99

    @pytest.mark.parametrize("slope", [-1.3, -2.01, -3.0])
    def test_log_linear_data_is_exact(self, slope):
        counts = {k: 10.0 ** (5 + slope * math.log10(k)) for k in (1, 2, 3, 5, 8, 13)}
        fit = SmallWorldMetrics.power_law_fit(DegreeHistogram(counts))
        assert fit.slope == pytest.approx(slope, abs=1e-9)
        assert fit.r2 == pytest.approx(1.0, abs=1e-12)

    def test_zero_degree_and_empty_bins_are_ignored(self):
        fit = SmallWorldMetrics.power_law_fit(DegreeHistogram({0: 999, 1: 400, 2: 100, 3: 0, 4: 25}))
        assert fit.points_used == 3
        assert fit.slope == pytest.approx(-2.0, abs=1e-9)

    def test_scale_invariance(self):
        counts = {1: 300, 2: 90, 3: 41, 5: 12, 9: 4}
        fit = SmallWorldMetrics.power_law_fit(DegreeHistogram(counts))
        scaled = SmallWorldMetrics.power_law_fit(DegreeHistogram({k: 7 * c for k, c in counts.items()}))
        assert scaled.slope == pytest.approx(fit.slope, abs=1e-12)
        assert scaled.r2 == pytest.approx(fit.r2, abs=1e-12)

    def test_single_bin_is_insufficient(self):
        with pytest.raises(InsufficientDataError):
            SmallWorldMetrics.power_law_fit(DegreeHistogram({0: 3, 4: 50}))


class TestErReference:

    def test_reference_graph_values(self):
        reference = SmallWorldMetrics.er_reference(8835, 110533)
        assert reference.ell_rand == pytest.approx(3.71, abs=0.02)
        assert reference.c_rand == pytest.approx(0.0013, abs=0.0001)
        assert reference.d == pytest.approx(11.51, abs=0.01)

    def test_complete_graph(self):
        reference = SmallWorldMetrics.er_reference(10, 10 + 2 * 45)
        assert reference.d == 9
        assert reference.ell_rand == pytest.approx(math.log(10) / math.log(9))
        assert reference.c_rand == 1.0

    def test_degenerate_density(self):
        with pytest.raises(DegenerateDensityError):
            SmallWorldMetrics.er_reference(10, 10)


class TestErDegreePmf:

    def test_two_nodes(self):
        assert SmallWorldMetrics.er_degree_pmf(2, 0.5, 0) == pytest.approx(0.5)
        assert SmallWorldMetrics.er_degree_pmf(2, 0.5, 1) == pytest.approx(0.5)

    def test_empty_graph(self):
        assert SmallWorldMetrics.er_degree_pmf(7, 0.0, 0) == 1.0

    def test_binomial_value(self):
        assert SmallWorldMetrics.er_degree_pmf(4, 1 / 3, 1) == pytest.approx(4 / 9)

    @pytest.mark.parametrize("n, p", [(2, 0.3), (9, 0.5), (25, 0.07)])
    def test_sums_to_one(self, n, p):
        total = sum(SmallWorldMetrics.er_degree_pmf(n, p, k) for k in range(n))
        assert total == pytest.approx(1.0, abs=1e-12)

    def test_domain(self):
        with pytest.raises(DomainError):
            SmallWorldMetrics.er_degree_pmf(4, 0.5, 4)
        with pytest.raises(DomainError):
            SmallWorldMetrics.er_degree_pmf(4, 1.5, 1)


class TestDegreeTable:

    def test_rows(self, path4):
        table = SmallWorldMetrics.degree_table(path4)
        assert [(k, c) for k, c, _ in table] == [(0, 0), (1, 2), (2, 2)]
        p = 6 / 12
        assert table[1][2] == pytest.approx(4 * 3 * p * (1 - p) ** 2)


class TestSmallWorldCheck:

    def test_complete_graph_is_not_small_world(self):
        report = SmallWorldMetrics.small_world_check(complete_graph(50))
        assert report.clustering == pytest.approx(1.0)
        assert report.diameter == 1
        assert report.avg_path_length == 1.0
        assert report.ok_diameter
        # m = 2500 exceeds both 10 n ln n and C n^2 / 10
        assert not report.ok_sparsity
        assert not report.ok_clustering
        assert report.fit is None
        assert not report.ok_heavytail
        assert not report.verdict

    def test_disconnected_rejected(self):
        with pytest.raises(NotConnectedError):
            SmallWorldMetrics.small_world_check(Graph.from_edges(4, [(0, 1)]))

    def test_thresholds(self):
        # Hub 0 with triangles hanging off it: clustered, short, skewed degrees
        edges = [(0, v) for v in range(1, 41)] + [(v, v + 1) for v in range(1, 41, 2)]
        graph = Graph.from_edges(41, edges)
        report = SmallWorldMetrics.small_world_check(graph, 0.9)
        n, m = graph.node_count, graph.arc_count
        assert report.ok_sparsity == (m <= 10 * n * math.log(n))
        assert report.ok_diameter == (report.diameter < 3 * math.log(n))
        assert report.ok_clustering == (report.clustering > 10 * m / n ** 2)
        assert report.lcc_fraction == 0.9
        assert report.to_dict()['avg_path_len'] == report.avg_path_length

    def test_verdict_needs_every_criterion(self, bridged_cliques):
        report = SmallWorldMetrics.small_world_check(bridged_cliques)
        forced = dataclasses.replace(report, ok_sparsity=True, ok_diameter=True,
                                     ok_clustering=True, ok_heavytail=True)
        assert forced.verdict
        for name in ('ok_sparsity', 'ok_diameter', 'ok_clustering', 'ok_heavytail'):
            assert not dataclasses.replace(forced, **{name: False}).verdict

    def test_report_dict_has_all_fields(self, bridged_cliques):
        record = SmallWorldMetrics.small_world_check(bridged_cliques).to_dict()
        assert tuple(record) == (
            'n', 'm', 'lcc_fraction', 'diameter', 'avg_path_len', 'clustering', 'slope', 'r2',
            'ok_sparsity', 'ok_diameter', 'ok_clustering', 'ok_heavytail', 'verdict')

    def test_er_comparison(self, bridged_cliques):
        report = SmallWorldMetrics.small_world_check(bridged_cliques)
        comparison = SmallWorldMetrics.er_comparison(report)
        reference = SmallWorldMetrics.er_reference(10, bridged_cliques.arc_count)
        assert comparison.reference == reference
        assert comparison.clustering_ratio == pytest.approx(report.clustering / reference.c_rand)
        assert comparison.ell_ratio == pytest.approx(report.avg_path_length / reference.ell_rand)
        assert np.isfinite(comparison.ell_ratio)

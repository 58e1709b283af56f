"""
Analysis commands: small-world reports and degree tables.
"""
from ..edge_list import EdgeListCodec
from ..graph import StructureAnalyzer
from ..message_log import MessageLog, Level
from ..reports import ReportWriter
from ..sw_metrics import SmallWorldMetrics
from .base_command import BaseCommand


class MetricsCommand(BaseCommand):
    """metrics: small-world report of a graph's largest component"""

    name = 'metrics'
    help = 'Evaluate the small-world criteria on the largest component of a graph'

    def add_arguments(self, parser):
        parser.add_argument('--in', dest='input', required=True)
        parser.add_argument('--report', required=True,
                            help='CSV destination; the JSON goes next to it')
        parser.add_argument('--er-comparison', default=None,
                            help='Write path length and clustering relative to a random graph')

    def run(self, args):
        graph = EdgeListCodec.read(args.input)
        count, largest, fraction = StructureAnalyzer.component_summary(graph)
        MessageLog.log_message(
            f"{count} component(s); the largest has {largest} of {graph.node_count} nodes",
            level=Level.INFO if count == 1 else Level.WARNING)
        lcc, _ = StructureAnalyzer.largest_component_subgraph(graph)
        report = SmallWorldMetrics.small_world_check(lcc, fraction)
        ReportWriter.write_small_world_report(report, args.report)
        if args.er_comparison:
            comparison = SmallWorldMetrics.er_comparison(report)
            ReportWriter.write_json(args.er_comparison, comparison.to_dict())
        return 0


class DegreesCommand(BaseCommand):
    """degrees: degree histogram next to the random-graph expectation"""

    name = 'degrees'
    help = 'Write the degree distribution with same-density random-graph expectations'

    def add_arguments(self, parser):
        parser.add_argument('--in', dest='input', required=True)
        parser.add_argument('--out', required=True)

    def run(self, args):
        graph = EdgeListCodec.read(args.input)
        ReportWriter.write_degree_table(SmallWorldMetrics.degree_table(graph), args.out)
        return 0

"""
Graph-producing commands: random graphs, strong confluence graphs, makesw.
"""
from ..confluence import ConfluenceExtractor, ScgParams
from ..edge_list import EdgeListCodec
from ..pipeline import ErGenerator, MakeswParams, PipelineManager
from ..reports import ReportWriter
from ..sw_metrics import SmallWorldMetrics
from .base_command import BaseCommand


class GenerateErCommand(BaseCommand):
    """generate-er: write a fixed-edge-count random graph"""

    name = 'generate-er'
    help = 'Generate a reflexive Erdos-Renyi graph with an exact arc count'

    def add_arguments(self, parser):
        parser.add_argument('--nodes', type=int, required=True)
        parser.add_argument('--arcs', type=int, required=True)
        parser.add_argument('--seed', type=int, required=True)
        parser.add_argument('--out', required=True)

    def run(self, args):
        graph = ErGenerator.er_graph(args.nodes, args.arcs, args.seed)
        EdgeListCodec.write(graph, args.out)
        return 0


class ScgCommand(BaseCommand):
    """scg: extract the strong confluence graph of an input graph"""

    name = 'scg'
    help = 'Extract the strong confluence graph of an edge-list graph'

    def add_arguments(self, parser):
        parser.add_argument('--in', dest='input', required=True)
        parser.add_argument('--walk-length', type=int, required=True)
        parser.add_argument('--arcs', type=int, required=True)
        parser.add_argument('--out', required=True)
        parser.add_argument('--dump-scores', default=None)

    def run(self, args):
        graph = EdgeListCodec.read(args.input)
        params = ScgParams(graph.node_count, args.walk_length, args.arcs)
        walk_matrix = ConfluenceExtractor.all_pairs_walk_matrix(graph, params.t)
        result = ConfluenceExtractor.scg_with_diagnostics(graph, params.t, params.m, walk_matrix)
        EdgeListCodec.write(result.graph, args.out)
        if args.dump_scores:
            us, vs, scores = ConfluenceExtractor.ranked_arrays(walk_matrix)
            ReportWriter.write_scores(us, vs, scores, args.dump_scores)
        return 0


class MakeswCommand(BaseCommand):
    """makesw: random graph, strong confluence graph, largest component"""

    name = 'makesw'
    help = 'Make a small-world graph from a random graph'

    def add_arguments(self, parser):
        parser.add_argument('--nodes', type=int, required=True)
        parser.add_argument('--arcs-in', type=int, required=True)
        parser.add_argument('--walk-length', type=int, required=True)
        parser.add_argument('--arcs', type=int, required=True)
        parser.add_argument('--seed', type=int, required=True)
        parser.add_argument('--out', required=True)
        parser.add_argument('--keep-full', default=None,
                            help='Also write the graph before component selection')
        parser.add_argument('--report', default=None)

    def run(self, args):
        params = MakeswParams(args.nodes, args.arcs_in, args.walk_length, args.arcs, args.seed)
        result = PipelineManager.makesw(params)
        EdgeListCodec.write(result.graph, args.out)
        if args.keep_full:
            EdgeListCodec.write(result.full_graph, args.keep_full)
        if args.report:
            report = SmallWorldMetrics.small_world_check(result.graph,
                                                         result.provenance.lcc_fraction)
            ReportWriter.write_small_world_report(report, args.report)
        return 0

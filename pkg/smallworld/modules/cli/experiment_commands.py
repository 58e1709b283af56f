"""
Experiment commands: walk-length sweeps and confluence curves.
"""
from ..edge_list import EdgeListCodec
from ..errors import ParameterError
from ..pipeline import PipelineManager
from ..reports import ReportWriter
from .base_command import BaseCommand, seed_list


class SweepCommand(BaseCommand):
    """sweep: small-world reports of makesw over a range of walk lengths"""

    name = 'sweep'
    help = 'Run makesw for every walk length in a range and every seed'

    def add_arguments(self, parser):
        parser.add_argument('--nodes', type=int, required=True)
        parser.add_argument('--arcs-in', type=int, required=True)
        parser.add_argument('--arcs', type=int, required=True)
        parser.add_argument('--t-min', type=int, required=True)
        parser.add_argument('--t-max', type=int, required=True)
        parser.add_argument('--seeds', type=seed_list, required=True)
        parser.add_argument('--out', required=True)

    def run(self, args):
        if args.t_min > args.t_max:
            raise ParameterError(f"Empty walk-length range {args.t_min}..{args.t_max}")
        records = PipelineManager.sweep(args.nodes, args.arcs_in, args.arcs,
                                        range(args.t_min, args.t_max + 1), args.seeds)
        ReportWriter.write_sweep(records, args.out)
        return 0


class ConfluenceCurveCommand(BaseCommand):
    """confluence-curve: two confluence series from one source node"""

    name = 'confluence-curve'
    help = 'Write the t-step probabilities from u to v1 and to v2'

    def add_arguments(self, parser):
        parser.add_argument('--in', dest='input', required=True)
        parser.add_argument('--u', type=int, required=True)
        parser.add_argument('--v1', type=int, required=True)
        parser.add_argument('--v2', type=int, required=True)
        parser.add_argument('--t-max', type=int, required=True)
        parser.add_argument('--out', required=True)

    def run(self, args):
        graph = EdgeListCodec.read(args.input)
        first, second = PipelineManager.confluence_experiment(
            graph, args.u, args.v1, args.v2, args.t_max)
        ReportWriter.write_confluence_curve(first, second, args.out)
        return 0

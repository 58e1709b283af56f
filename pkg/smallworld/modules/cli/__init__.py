"""Command modules for the Small World command line."""
from .base_command import BaseCommand
from .graph_commands import GenerateErCommand, ScgCommand, MakeswCommand
from .analysis_commands import MetricsCommand, DegreesCommand
from .experiment_commands import SweepCommand, ConfluenceCurveCommand

COMMANDS = (
    GenerateErCommand,
    ScgCommand,
    MakeswCommand,
    MetricsCommand,
    DegreesCommand,
    SweepCommand,
    ConfluenceCurveCommand,
)

__all__ = [
    'BaseCommand',
    'GenerateErCommand',
    'ScgCommand',
    'MakeswCommand',
    'MetricsCommand',
    'DegreesCommand',
    'SweepCommand',
    'ConfluenceCurveCommand',
    'COMMANDS'
]

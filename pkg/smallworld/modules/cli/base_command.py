"""
Base command for the Small World command line.
"""
import argparse


def seed_list(text):
    """Parse `S1,S2,...` into a list of non-negative integers"""
    try:
        seeds = [int(part) for part in text.split(',')]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid seed list: {text!r}")
    if any(seed < 0 for seed in seeds):
        raise argparse.ArgumentTypeError(f"seeds must be non-negative: {text!r}")
    return seeds


class BaseCommand:
    """One subcommand: declares its flags and runs on parsed arguments"""

    name = None
    help = None

    def register(self, subparsers):
        """Add this command's parser to the application"""
        parser = subparsers.add_parser(self.name, help=self.help, description=self.help)
        self.add_arguments(parser)
        parser.set_defaults(command=self)
        return parser

    def add_arguments(self, parser):
        raise NotImplementedError("Subclasses must implement add_arguments()")

    def run(self, args):
        """Execute the command; returns the exit status"""
        raise NotImplementedError("Subclasses must implement run()")

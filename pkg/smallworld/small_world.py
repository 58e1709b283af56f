"""
Small World command-line application.
"""
import argparse
import configparser
import os.path
import sys

from .modules.cli import COMMANDS
from .modules.errors import SmallWorldError
from .modules.message_log import MessageLog
from .modules.settings_manager import SettingsManager


class SmallWorld:
    """Command-line implementation"""

    def __init__(self):
        self.package_dir = os.path.dirname(__file__)
        self.parser = None
        self.commands = []
        self.prog = 'smallworld'
        self.init_commands()

    def version(self):
        """Version declared in metadata.txt"""
        metadata = configparser.ConfigParser()
        metadata.read(os.path.join(self.package_dir, 'metadata.txt'), encoding='utf-8')
        return metadata.get('general', 'version', fallback='unknown')

    def init_commands(self):
        """Create the parser and register every command"""
        self.parser = argparse.ArgumentParser(
            prog=self.prog,
            description='Synthesize small-world graphs from random graphs by random-walk '
                        'confluence, and measure small-world structure.')
        self.parser.add_argument('--version', action='version',
                                 version=f'%(prog)s {self.version()}')
        self.parser.add_argument('--workers', type=int, default=None,
                                 help='Worker threads (results do not depend on it)')
        self.parser.add_argument('--log-level', default=None,
                                 choices=['INFO', 'SUCCESS', 'WARNING', 'CRITICAL'])
        subparsers = self.parser.add_subparsers(dest='command_name', required=True,
                                                metavar='COMMAND')
        for command_class in COMMANDS:
            command = command_class()
            command.register(subparsers)
            self.commands.append(command)

    def run(self, argv=None):
        """Parse argv, run the chosen command and return the exit status"""
        args = self.parser.parse_args(argv)
        try:
            if args.workers is not None:
                SettingsManager.set_workers(args.workers)
            if args.log_level is not None:
                SettingsManager.set_log_level(args.log_level)
            MessageLog.configure(SettingsManager.get_log_level())
            return args.command.run(args) or 0
        except (SmallWorldError, OSError, ValueError) as e:
            message = ' '.join(str(e).split())
            sys.stderr.write(f"{self.prog}: error: {message}\n")
            return 1

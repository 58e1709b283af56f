"""
Small World: small-world graphs from random graphs by random-walk confluence.
"""


def main(argv=None):
    """Run the command-line application.

    :param argv: Arguments without the program name; defaults to sys.argv[1:].
    :type argv: list
    """
    from .small_world import SmallWorld
    return SmallWorld().run(argv)

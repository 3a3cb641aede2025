import argparse
import logging
import sys

from dotenv import load_dotenv

load_dotenv()

from config import configure_logging, get_invalid_env_vars  # noqa: E402
from polyhull.cli import bench, gen, hull, lattice, lp  # noqa: E402
from services.arith import ScalarParseError  # noqa: E402
from services.polyfile import PolyParseError  # noqa: E402

logger = logging.getLogger("polyhull")

HANDLERS = {
    "gen": gen,
    **dict.fromkeys(hull.COMMANDS, hull),
    **dict.fromkeys(lattice.COMMANDS, lattice),
    "lp": lp,
    "bench": bench,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyhull",
        description="Exact polyhedral computations on .poly files",
    )
    subparsers = parser.add_subparsers(dest="command")

    gen.register(subparsers)
    hull.register(subparsers)
    lattice.register(subparsers)
    lp.register(subparsers)
    bench.register(subparsers)
    return parser


def run_command(argv: list[str]) -> int:
    """Run one subcommand; returns the process exit code."""
    invalid = get_invalid_env_vars()
    if invalid:
        names = ", ".join(invalid)
        print(f"Error: invalid environment variables: {names}", file=sys.stderr)
        return 2

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    if args.command is None:
        parser.print_help()
        return 2

    try:
        HANDLERS[args.command].handle(args)
    except PolyParseError as e:
        print(f"Error: malformed input, {e}", file=sys.stderr)
        return 1
    except (ValueError, ScalarParseError, ZeroDivisionError, OSError) as e:
        logger.debug("command %s failed", args.command, exc_info=True)
        print(f"Error: {e}", file=sys.stderr)
        return 1
    return 0


def main():
    configure_logging()
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()

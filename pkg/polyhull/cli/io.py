"""Shared input/output plumbing for the subcommands."""

import sys
from pathlib import Path

from services.polyfile import read
from services.polyhedron import Polytope


def add_input(parser) -> None:
    parser.add_argument(
        "input",
        nargs="?",
        default="-",
        help=".poly file to read (default: stdin)",
    )


def add_output(parser) -> None:
    parser.add_argument("--out", help="Write to this file instead of stdout")


def load_input(args) -> Polytope:
    if args.input == "-":
        return read(sys.stdin.read())
    return read(Path(args.input).read_text())


def emit(args, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if getattr(args, "out", None):
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)

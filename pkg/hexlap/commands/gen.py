"""gen: standard graphs as edge lists."""
import argparse
import sys

from ..errors import EXIT_OK
from ..services.graphs import MIN_ORDER, generate, serialize_edge_list


def run(args: argparse.Namespace) -> int:
    sys.stdout.write(serialize_edge_list(generate(args.kind, args.m)))
    return EXIT_OK


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("gen", help="Write a cycle, path or complete graph")
    parser.add_argument("kind", choices=sorted(MIN_ORDER))
    parser.add_argument("m", type=int, help="Number of vertices")
    parser.set_defaults(func=run)

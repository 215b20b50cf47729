"""sizes: predicted order and size of every level up to H^k_n(G)."""
import argparse
import sys

from ..deps.inputs import get_graph, get_params
from ..errors import EXIT_OK
from ..services.transform import size_after
from ._common import add_transform_args


def run(args: argparse.Namespace) -> int:
    params = get_params(args.k, args.n)
    g = get_graph(args.file)
    sys.stdout.write("level,N,E\n")
    for level in range(params.n + 1):
        N, E = size_after(g.num_vertices, g.num_edges, params.k, level)
        sys.stdout.write(f"{level},{N},{E}\n")
    return EXIT_OK


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("sizes", help="Print (N, E) for levels 0..n without building")
    add_transform_args(parser)
    parser.set_defaults(func=run)

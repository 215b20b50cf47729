"""transform: build H^k_n(G) explicitly."""
import argparse
import sys

from ..deps.inputs import get_graph, get_params
from ..errors import EXIT_OK
from ..services.graphs import serialize_edge_list
from ..services.transform import hexagonal_iter
from ._common import add_transform_args


def run(args: argparse.Namespace) -> int:
    params = get_params(args.k, args.n)
    g = get_graph(args.file)
    result = hexagonal_iter(g, params) if params.n else g
    sys.stdout.write(serialize_edge_list(result))
    return EXIT_OK


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("transform", help="Write the edge list of H^k_n(G)")
    add_transform_args(parser)
    parser.set_defaults(func=run)

"""invariants: Kemeny's constant, Kf' and spanning trees of H^k_n(G)."""
import argparse
import sys

from ..deps.inputs import get_graph, get_params
from ..errors import EXIT_OK
from ..services.invariants import invariants_closed, invariants_from_spectrum
from ._common import add_transform_args


def run(args: argparse.Namespace) -> int:
    params = get_params(args.k, args.n)
    g = get_graph(args.file)
    if args.method == "closed":
        report = invariants_closed(g, params)
    else:
        report = invariants_from_spectrum(g, params)

    if args.json:
        sys.stdout.write(report.model_dump_json() + "\n")
        return EXIT_OK

    tau = report.tau
    lines = [
        f"method: {report.method}",
        f"N: {report.N}",
        f"E: {report.E}",
        f"kemeny: {report.kemeny!r}",
        f"kirchhoff: {report.kirchhoff!r}",
    ]
    if tau.exact is not None:
        lines.append(f"tau: {tau.exact}")
    if tau.factored is not None:
        lines += [f"tau factored: {tau.factored}", f"tau approx: {tau.scientific}"]
    lines.append(f"tau log10: {tau.log10!r}")
    sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("invariants", help="K, Kf' and tau of H^k_n(G)")
    add_transform_args(parser)
    parser.add_argument("--method", choices=["closed", "spectrum"], default="closed")
    parser.add_argument("--json", action="store_true", help="JSON report")
    parser.set_defaults(func=run)

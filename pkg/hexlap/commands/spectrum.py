"""spectrum: normalized Laplacian spectrum of H^k_n(G)."""
import argparse
import csv
import sys

from ..deps.inputs import get_graph, get_params
from ..errors import EXIT_OK
from ..schemas.spectrum import SpectrumReport
from ..services.iterative import spectrum_n
from ..services.oracle import spectrum_oracle
from ..services.transform import hexagonal_iter
from ._common import add_transform_args


def run(args: argparse.Namespace) -> int:
    params = get_params(args.k, args.n)
    g = get_graph(args.file)
    if args.method == "oracle":
        spectrum = spectrum_oracle(hexagonal_iter(g, params) if params.n else g)
    else:
        spectrum = spectrum_n(g, params)
    report = SpectrumReport.from_spectrum(spectrum, params.k, params.n)

    if args.json:
        sys.stdout.write(report.model_dump_json() + "\n")
    elif args.csv:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["value", "multiplicity", "family"])
        for entry in report.entries:
            writer.writerow([repr(entry.value), entry.multiplicity, entry.family or ""])
    else:
        sys.stdout.write(f"N={report.N} E={report.E} bipartite={report.bipartite}\n")
        for entry in report.entries:
            family = f"  [{entry.family}]" if entry.family else ""
            sys.stdout.write(f"{entry.value:.12f}  x{entry.multiplicity}{family}\n")
    return EXIT_OK


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("spectrum", help="Normalized Laplacian spectrum of H^k_n(G)")
    add_transform_args(parser)
    parser.add_argument("--method", choices=["oracle", "iterative"], default="iterative")
    output = parser.add_mutually_exclusive_group()
    output.add_argument("--json", action="store_true", help="JSON report")
    output.add_argument("--csv", action="store_true", help="CSV rows value,multiplicity,family")
    parser.set_defaults(func=run)

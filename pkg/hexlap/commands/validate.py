"""validate: published tables and oracle-equivalence suites."""
import argparse
import csv
import sys

from ..errors import EXIT_FAILURE, EXIT_OK
from ..schemas.validation import ValidationRecord
from ..services.validation import run_oracle, run_tables

CSV_FIELDS = list(ValidationRecord.model_fields)


def run(args: argparse.Namespace) -> int:
    report = run_tables() if args.tables else run_oracle()

    if args.json:
        sys.stdout.write(report.model_dump_json(indent=2) + "\n")
    elif args.csv:
        writer = csv.DictWriter(sys.stdout, fieldnames=CSV_FIELDS, lineterminator="\n")
        writer.writeheader()
        for record in report.records:
            writer.writerow(record.model_dump())
    else:
        for record in report.records:
            line = f"{record.status:<20} {record.id}: {record.value} vs {record.reference}"
            sys.stdout.write(line + "\n")
            if record.explanation:
                sys.stdout.write(f"{'':<20} {record.explanation}\n")
        summary = report.summary
        sys.stdout.write(
            f"{summary.total} records: {summary.match} match, {summary.flagged} flagged, "
            f"{summary.mismatch} mismatch\n"
        )
    return EXIT_OK if report.passed else EXIT_FAILURE


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("validate", help="Run a validation suite")
    suite = parser.add_mutually_exclusive_group(required=True)
    suite.add_argument("--tables", action="store_true", help="Recompute the published tables")
    suite.add_argument("--oracle", action="store_true", help="Compare against dense oracles")
    output = parser.add_mutually_exclusive_group()
    output.add_argument("--json", action="store_true", help="JSON report")
    output.add_argument("--csv", action="store_true", help="CSV, one row per record")
    parser.set_defaults(func=run)

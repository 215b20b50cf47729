"""Argument helpers shared by the commands."""
import argparse


def add_transform_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("-k", type=int, default=1, help="Hexagonal paths per edge (default 1)")
    parser.add_argument("-n", type=int, default=1, help="Number of iterations (default 1)")
    parser.add_argument("file", help="Edge-list file, or - for standard input")

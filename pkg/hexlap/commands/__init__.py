"""Command modules, one per subcommand, each exposing ``register(subparsers)``."""
from . import gen, invariants, sizes, spectrum, transform, validate

__all__ = ["gen", "invariants", "sizes", "spectrum", "transform", "validate"]

"""Input dependency: load an edge-list graph from a path or standard input."""
import logging
import sys
from pathlib import Path

from ..errors import EdgeListFormatError, InputError
from ..models.graph import Graph, TransformParams
from ..services.graphs import parse_edge_list

logger = logging.getLogger(__name__)

STDIN = "-"


def read_text(source: str) -> str:
    if source == STDIN:
        return sys.stdin.read()
    try:
        return Path(source).read_bytes().decode("ascii")
    except UnicodeDecodeError:
        raise EdgeListFormatError(f"{source}: edge list must be ASCII")
    except OSError as e:
        logger.debug(f"Cannot read {source}: {e}")
        raise InputError(f"Cannot read {source}: {e.strerror or e}")


def get_graph(source: str) -> Graph:
    """Parsed and validated graph from ``source`` (``-`` for stdin)."""
    return parse_edge_list(read_text(source))


def get_params(k: int, n: int) -> TransformParams:
    """Transform parameters; pydantic rejects k < 1 and n < 0."""
    return TransformParams(k=k, n=n)

"""Domain models."""
from .graph import Edge, Graph, GraphMeta, TransformParams
from .spectrum import Family, MatchReport, MultiplicityMismatch, RootSet, Spectrum, SpectrumEntry
from .tau import BigExponentProduct

__all__ = [
    "Edge",
    "Graph",
    "GraphMeta",
    "TransformParams",
    "Family",
    "MatchReport",
    "MultiplicityMismatch",
    "RootSet",
    "Spectrum",
    "SpectrumEntry",
    "BigExponentProduct",
]

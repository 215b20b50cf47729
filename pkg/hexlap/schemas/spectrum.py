"""Spectrum report schemas."""
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from ..models.spectrum import Spectrum


class SpectrumEntryResponse(BaseModel):
    value: float
    multiplicity: int
    family: Optional[str] = None


class SpectrumReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    k: int
    n: int
    N: int = Field(..., description="Order of H^k_n(G)")
    E: int = Field(..., description="Size of H^k_n(G)")
    bipartite: bool
    entries: list[SpectrumEntryResponse] = Field(..., description="Sorted by value, ascending")

    @classmethod
    def from_spectrum(cls, s: Spectrum, k: int, n: int) -> "SpectrumReport":
        return cls(
            k=k,
            n=n,
            N=s.meta.num_vertices,
            E=s.meta.num_edges,
            bipartite=s.meta.bipartite,
            entries=[
                SpectrumEntryResponse(
                    value=e.value,
                    multiplicity=e.multiplicity,
                    family=e.family.value if e.family else None,
                )
                for e in s.entries
            ],
        )

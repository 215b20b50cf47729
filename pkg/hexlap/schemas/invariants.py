"""Invariant report schemas."""
import math
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

InvariantMethod = Literal["spectrum", "closed-form", "oracle"]


class TauValue(BaseModel):
    exact: Optional[str] = Field(
        None, description="Exact spanning-tree count; omitted above HEXLAP_TAU_EXACT_DIGITS digits"
    )
    log10: float = Field(..., description="log10 of the spanning-tree count")
    factored: Optional[str] = Field(None, description="base^exponent factors times the base count")
    scientific: Optional[str] = Field(None, description="15 significant digits")


class InvariantReport(BaseModel):
    """Kemeny constant, Kf' and spanning-tree count of H^k_n(G)."""

    model_config = ConfigDict(frozen=True)

    k: int
    n: int
    N: int = Field(..., description="Order of H^k_n(G)")
    E: int = Field(..., description="Size of H^k_n(G)")
    kemeny: float
    kirchhoff: float
    tau: TauValue
    method: InvariantMethod

    @model_validator(mode="after")
    def check_kirchhoff_identity(self) -> "InvariantReport":
        expected = 2 * self.E * self.kemeny
        if not math.isclose(self.kirchhoff, expected, rel_tol=1e-9, abs_tol=1e-12):
            raise ValueError(f"Kf' = {self.kirchhoff} differs from 2*E*K = {expected}")
        return self

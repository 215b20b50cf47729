"""Spectrum models."""
from collections.abc import Iterable
from enum import StrEnum
from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..errors import SpectrumInputError
from .graph import GraphMeta


class Family(StrEnum):
    """Which branch of the spectral step produced an eigenvalue."""

    CUBIC_IMAGE = "cubic-image"
    QUINTIC_IMAGE = "quintic-image"
    ZERO = "zero"
    TWO = "two"
    HALF_PAIR = "half-pair"
    PHI_PAIR = "phi-pair"
    PSI_PAIR = "psi-pair"
    SIGMA0_EXTRA = "sigma0-extra"
    SIGMA2_EXTRA = "sigma2-extra"


PINNED_FAMILIES = frozenset({Family.ZERO, Family.TWO})


def _merge_scale(value: float) -> float:
    """Merge tolerances shrink with the distance to the spectrum ends 0 and 2."""
    return min(1.0, abs(value), abs(2.0 - value))


SpectrumItem = tuple[float, int, Optional[Family]]


def _joins(last: SpectrumItem, item: SpectrumItem, tol: float) -> bool:
    if (last[2] in PINNED_FAMILIES or item[2] in PINNED_FAMILIES) and last[2] != item[2]:
        return False
    return item[0] - last[0] <= tol * min(_merge_scale(last[0]), _merge_scale(item[0]))


class SpectrumEntry(BaseModel):
    model_config = ConfigDict(frozen=True)

    value: float
    multiplicity: int = Field(..., ge=1)
    family: Optional[Family] = None


class Spectrum(BaseModel):
    """Normalized Laplacian eigenvalue multiset, grouped by value."""

    model_config = ConfigDict(frozen=True)

    entries: tuple[SpectrumEntry, ...]
    total_dim: int = Field(..., ge=0)
    meta: GraphMeta

    @model_validator(mode="after")
    def check_dimension(self) -> "Spectrum":
        total = sum(entry.multiplicity for entry in self.entries)
        if total != self.total_dim:
            raise SpectrumInputError(
                f"Multiplicities sum to {total}, expected total_dim {self.total_dim}"
            )
        return self

    @classmethod
    def assemble(
        cls,
        items: Iterable[SpectrumItem],
        meta: GraphMeta,
        tol: float,
    ) -> "Spectrum":
        """Build a spectrum from (value, multiplicity, family) triples.

        A value joins its predecessor when the gap is within ``tol``, scaled down near 0
        and 2 so that eigenvalues converging to the ends stay apart. Entries tagged as the
        fixed eigenvalues 0 and 2 never merge with other families. A merged entry keeps its
        family only if every contributor shares it. Zero multiplicities are dropped.
        """
        ordered = sorted(
            ((float(v), int(m), f) for v, m, f in items if m > 0), key=lambda item: item[0]
        )
        groups: list[list[SpectrumItem]] = []
        for item in ordered:
            if groups and _joins(groups[-1][-1], item, tol):
                groups[-1].append(item)
            else:
                groups.append([item])

        entries = []
        for group in groups:
            multiplicity = sum(m for _, m, _ in group)
            families = {f for _, _, f in group}
            family = families.pop() if len(families) == 1 else None
            if len(group) == 1:
                value = group[0][0]
            else:
                value = sum(v * m for v, m, _ in group) / multiplicity
            entries.append(SpectrumEntry(value=value, multiplicity=multiplicity, family=family))

        return cls(
            entries=tuple(entries),
            total_dim=sum(e.multiplicity for e in entries),
            meta=meta,
        )

    @classmethod
    def from_values(cls, values: Iterable[float], meta: GraphMeta, tol: float) -> "Spectrum":
        return cls.assemble(((v, 1, None) for v in values), meta, tol)

    def expanded(self) -> np.ndarray:
        """All eigenvalues, ascending, repeated by multiplicity."""
        return np.repeat(
            np.array([e.value for e in self.entries], dtype=float),
            [e.multiplicity for e in self.entries],
        )

    def multiplicity_of(self, value: float, tol: float) -> int:
        return sum(e.multiplicity for e in self.entries if abs(e.value - value) <= tol)

    @property
    def tagged(self) -> bool:
        return any(e.family is not None for e in self.entries)

    def zero_entries(self, tol: float) -> list[SpectrumEntry]:
        """Entries standing for eigenvalue 0.

        A stepped spectrum tags them; an untagged one (from the oracle) has them located
        within ``tol`` of 0.
        """
        if self.tagged:
            return [e for e in self.entries if e.family is Family.ZERO]
        return [e for e in self.entries if abs(e.value) <= tol]

    def two_entries(self, tol: float) -> list[SpectrumEntry]:
        """Entries standing for eigenvalue 2, located like ``zero_entries``."""
        if self.tagged:
            return [e for e in self.entries if e.family is Family.TWO]
        return [e for e in self.entries if abs(e.value - 2.0) <= tol]

    @property
    def min_value(self) -> float:
        return self.entries[0].value

    @property
    def max_value(self) -> float:
        return self.entries[-1].value


class RootSet(BaseModel):
    """Real roots of a spectral-step polynomial for one sigma, ascending."""

    model_config = ConfigDict(frozen=True)

    sigma: float
    roots: tuple[float, ...]

    @property
    def product(self) -> float:
        return float(np.prod(self.roots))

    @property
    def reciprocal_sum(self) -> float:
        return float(sum(1.0 / r for r in self.roots))


class MultiplicityMismatch(BaseModel):
    model_config = ConfigDict(frozen=True)

    value: float
    left: int
    right: int


class MatchReport(BaseModel):
    """Outcome of comparing two spectra."""

    model_config = ConfigDict(frozen=True)

    passed: bool
    tolerance: float
    max_discrepancy: Optional[float] = Field(
        None, description="Largest |a_i - b_i| over sorted eigenvalues; None if sizes differ"
    )
    left_dim: int
    right_dim: int
    multiplicity_mismatches: tuple[MultiplicityMismatch, ...] = ()

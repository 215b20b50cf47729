"""Spectrum of H^k_n(G) from the spectrum of G, level by level, without building the graph.

One step maps every eigenvalue sigma not in {0, 2} of the previous level to the roots of
the cubic (k = 1) or quintic (k >= 2) step polynomial, each inheriting sigma's
multiplicity, and adds eigenvalue families whose values are fixed radicals and whose
multiplicities depend only on (N, E, k, bipartite). The images of sigma = 0 and sigma = 2
are already part of those fixed families and are not added again.
"""
import logging
import math

import numpy as np

from ..config import get_settings
from ..errors import SpectrumInputError
from ..models.graph import Graph, GraphMeta, TransformParams
from ..models.spectrum import Family, MatchReport, MultiplicityMismatch, Spectrum
from .oracle import spectrum_oracle
from .roots import step_roots
from .transform import require_theory_input

logger = logging.getLogger(__name__)

SQRT5 = math.sqrt(5.0)

SpectrumItem = tuple[float, int, Family | None]


def phi_pair() -> tuple[float, float]:
    """(5 -+ sqrt 5) / 4."""
    return (5 - SQRT5) / 4, (5 + SQRT5) / 4


def psi_pair() -> tuple[float, float]:
    """(3 -+ sqrt 5) / 4."""
    return (3 - SQRT5) / 4, (3 + SQRT5) / 4


def sigma0_pair(k: int) -> tuple[float, float]:
    """Non-zero roots of the quintic at sigma = 0."""
    root = math.sqrt(5 * k * k + 6 * k + 5)
    return (5 * k + 3 - root) / (4 * (k + 1)), (5 * k + 3 + root) / (4 * (k + 1))


def sigma2_pair(k: int) -> tuple[float, float]:
    """Roots of the quintic at sigma = 2 other than 2 and the psi pair."""
    root = math.sqrt(5 * k * k + 6 * k + 5)
    return (3 * k + 5 - root) / (4 * (k + 1)), (3 * k + 5 + root) / (4 * (k + 1))


def _check_previous(prev: Spectrum, tol: float) -> set[int]:
    """Validate the previous level and return the ids of its entries for 0 and 2."""
    meta = prev.meta
    if prev.total_dim != meta.num_vertices:
        raise SpectrumInputError(
            f"Spectrum has total multiplicity {prev.total_dim} but the graph has "
            f"{meta.num_vertices} vertices"
        )
    for entry in prev.entries:
        if entry.value < -tol or entry.value > 2 + tol:
            raise SpectrumInputError(f"Eigenvalue {entry.value} lies outside [0, 2]")

    zeros = prev.zero_entries(tol)
    zero = sum(e.multiplicity for e in zeros)
    if zero != 1:
        raise SpectrumInputError(
            f"Eigenvalue 0 has multiplicity {zero}; the graph must be connected"
        )
    twos = prev.two_entries(tol)
    if twos and not meta.bipartite:
        raise SpectrumInputError("Eigenvalue 2 present but the graph is marked non-bipartite")
    if meta.bipartite and not twos:
        raise SpectrumInputError("Graph is marked bipartite but eigenvalue 2 is missing")
    return {id(e) for e in (*zeros, *twos)}


def _fixed_families(meta: GraphMeta, k: int) -> list[SpectrumItem]:
    N, E, bipartite = meta.num_vertices, meta.num_edges, meta.bipartite
    cycle_rank = k * E - N + 1
    psi_multiplicity = cycle_rank if bipartite else cycle_rank - 1
    if psi_multiplicity < 0:
        raise SpectrumInputError(
            f"Inconsistent metadata N={N}, E={E}, bipartite={bipartite}: negative multiplicity"
        )

    items: list[SpectrumItem] = [(0.0, 1, Family.ZERO)]
    if bipartite:
        items.append((2.0, 1, Family.TWO))
    if k == 1:
        items += [(0.5, N, Family.HALF_PAIR), (1.5, N, Family.HALF_PAIR)]
    else:
        items += [(value, 1, Family.SIGMA0_EXTRA) for value in sigma0_pair(k)]
        if bipartite:
            items += [(value, 1, Family.SIGMA2_EXTRA) for value in sigma2_pair(k)]
    items += [(value, cycle_rank, Family.PHI_PAIR) for value in phi_pair()]
    items += [(value, psi_multiplicity, Family.PSI_PAIR) for value in psi_pair()]
    return items


def step_spectrum(prev: Spectrum, k: int) -> Spectrum:
    """Spectrum of H^k(G) from the spectrum of G."""
    if k < 1:
        raise SpectrumInputError(f"k must be at least 1, got {k}")
    tol = get_settings().MERGE_TOLERANCE
    pinned = _check_previous(prev, tol)
    meta = prev.meta

    items = _fixed_families(meta, k)
    family = Family.CUBIC_IMAGE if k == 1 else Family.QUINTIC_IMAGE
    mapped = [e for e in prev.entries if id(e) not in pinned]
    roots = step_roots([e.value for e in mapped], k)
    multiplicities = np.repeat([e.multiplicity for e in mapped], roots.shape[1])
    items += [
        (root, multiplicity, family)
        for root, multiplicity in zip(roots.ravel().tolist(), multiplicities.tolist())
    ]

    next_meta = GraphMeta(
        num_vertices=meta.num_vertices + 4 * k * meta.num_edges,
        num_edges=(5 * k + 1) * meta.num_edges,
        bipartite=meta.bipartite,
    )
    result = Spectrum.assemble(items, next_meta, tol)
    if result.total_dim != next_meta.num_vertices:
        raise SpectrumInputError(
            f"Step produced {result.total_dim} eigenvalues for a graph of order "
            f"{next_meta.num_vertices}"
        )
    logger.info(
        f"Spectral step k={k}: N {meta.num_vertices} -> {next_meta.num_vertices}, "
        f"{len(prev.entries)} -> {len(result.entries)} distinct eigenvalues"
    )
    return result


def spectrum_n(g: Graph, p: TransformParams) -> Spectrum:
    """Spectrum of H^k_n(G) from the oracle spectrum of G plus n spectral steps."""
    require_theory_input(g)
    spectrum = spectrum_oracle(g)
    for _ in range(p.n):
        spectrum = step_spectrum(spectrum, p.k)
    return spectrum


def _window_counts(s: Spectrum, points: np.ndarray, tol: float) -> np.ndarray:
    """Total multiplicity of ``s`` within ``tol`` of each point."""
    values = np.array([e.value for e in s.entries], dtype=float)
    cumulative = np.concatenate(([0], np.cumsum([e.multiplicity for e in s.entries])))
    upper = np.searchsorted(values, points + tol, side="right")
    lower = np.searchsorted(values, points - tol, side="left")
    return cumulative[upper] - cumulative[lower]


def compare_spectra(a: Spectrum, b: Spectrum, tol: float) -> MatchReport:
    """Sorted elementwise comparison of two spectra, with per-value multiplicity accounting."""
    left, right = a.expanded(), b.expanded()
    max_discrepancy = None
    if left.size == right.size:
        max_discrepancy = float(np.max(np.abs(left - right))) if left.size else 0.0

    points = np.unique([e.value for e in (*a.entries, *b.entries)])
    counts_left = _window_counts(a, points, tol)
    counts_right = _window_counts(b, points, tol)
    mismatches: list[MultiplicityMismatch] = []
    for value, mult_left, mult_right in zip(points, counts_left, counts_right):
        if mult_left == mult_right:
            continue
        if mismatches and value - mismatches[-1].value <= tol:
            continue
        mismatches.append(
            MultiplicityMismatch(value=float(value), left=int(mult_left), right=int(mult_right))
        )

    passed = max_discrepancy is not None and max_discrepancy <= tol and not mismatches
    return MatchReport(
        passed=passed,
        tolerance=tol,
        max_discrepancy=max_discrepancy,
        left_dim=a.total_dim,
        right_dim=b.total_dim,
        multiplicity_mismatches=tuple(mismatches),
    )

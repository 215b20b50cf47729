"""Kemeny's constant, multiplicative degree-Kirchhoff index and spanning-tree counts.

Three routes are provided and cross-checked elsewhere:

* from a spectrum (reciprocal sums and log-products of eigenvalues),
* from closed forms in the base graph's (K, Kf', tau, N, E), evaluated with exact
  rationals, together with the one-step recursions they unroll,
* from the explicit graph (oracle spectrum and Matrix-Tree count).

Notation: ``a = (25k+5)/(k+5)`` is the per-level Kemeny growth factor; ``N0, E0`` are
the order and size of the base graph.
"""
import logging
import math
from fractions import Fraction
from typing import Union

from ..config import get_settings
from ..errors import ExponentIntegralityError, SpectrumInputError, TauOverflowError
from ..models.graph import Graph, TransformParams
from ..models.spectrum import Family, Spectrum
from ..models.tau import BigExponentProduct
from ..schemas.invariants import InvariantReport, TauValue
from .iterative import spectrum_n
from .oracle import spanning_trees_matrix_tree, spectrum_oracle
from .transform import degree_log10_product, hexagonal_iter, require_theory_input, size_after

logger = logging.getLogger(__name__)

Real = Union[int, float, Fraction]

# Exact 1/a + 1/b for fixed pairs whose values do not depend on k.
PAIR_RECIPROCAL_SUMS: dict[Family, Fraction] = {
    Family.HALF_PAIR: Fraction(8, 3),
    Family.PHI_PAIR: Fraction(2),
    Family.PSI_PAIR: Fraction(6),
}


# Spectrum-based

def kemeny_from_spectrum(s: Spectrum) -> float:
    """Sum of 1/lambda over the non-zero eigenvalues.

    Fixed-pair families are accumulated exactly when both members are present with
    equal multiplicity.
    """
    zeros = s.zero_entries(get_settings().MERGE_TOLERANCE)
    zero = sum(e.multiplicity for e in zeros)
    if zero != 1:
        raise SpectrumInputError(f"Eigenvalue 0 has multiplicity {zero}; expected exactly 1")

    exact = Fraction(0)
    approximate: list[float] = []
    for family, pair_sum in PAIR_RECIPROCAL_SUMS.items():
        members = [e for e in s.entries if e.family == family]
        if len(members) == 2 and members[0].multiplicity == members[1].multiplicity:
            exact += pair_sum * members[0].multiplicity
        else:
            approximate += [e.multiplicity / e.value for e in members]

    for entry in s.entries:
        if entry.family in PAIR_RECIPROCAL_SUMS or any(entry is z for z in zeros):
            continue
        if entry.family == Family.TWO:
            exact += Fraction(entry.multiplicity, 2)
        else:
            approximate.append(entry.multiplicity / entry.value)

    return float(exact) + math.fsum(approximate)


def kirchhoff_from_kemeny(E: int, K: Real) -> float:
    """Kf' = 2 E K."""
    return float(2 * E * K)


def tau_log10_from_spectrum(s: Spectrum, degrees_product_log10: float) -> float:
    """log10 tau = log10(prod d_i) + sum log10(lambda_i) - log10(2E), lambda_i non-zero."""
    zeros = s.zero_entries(get_settings().MERGE_TOLERANCE)
    zero = sum(e.multiplicity for e in zeros)
    if zero != 1:
        raise SpectrumInputError(f"Eigenvalue 0 has multiplicity {zero}; expected exactly 1")

    total = [degrees_product_log10, -math.log10(2 * s.meta.num_edges)]
    for entry in s.entries:
        if any(entry is z for z in zeros):
            continue
        if entry.value <= 0:
            raise SpectrumInputError(f"Non-positive eigenvalue {entry.value}")
        total.append(entry.multiplicity * math.log10(entry.value))
    return math.fsum(total)


# Closed forms, k = 1

def kemeny_step_k1(K_prev: Real, N0: int, E0: int, n: int) -> Fraction:
    """K(H_n) from K(H_{n-1})."""
    return (
        5 * Fraction(K_prev)
        - Fraction(4, 3) * N0
        + (Fraction(104, 15) * 6 ** (n - 1) + Fraction(16, 15)) * E0
        - 2
    )


def kemeny_closed_k1(K0: Real, N0: int, E0: int, n: int) -> Fraction:
    growth = Fraction(5) ** n
    return (
        growth * Fraction(K0)
        - Fraction(1, 3) * (growth - 1) * N0
        + Fraction(104, 3) * (Fraction(6, 5) ** n - 1) * Fraction(5) ** (n - 1) * E0
        + Fraction(4, 15) * (growth - 1) * E0
        - Fraction(1, 2) * (growth - 1)
    )


def kirchhoff_step_k1(Kf_prev: Real, N0: int, E0: int, n: int) -> Fraction:
    six = Fraction(6) ** (n - 1)
    return (
        30 * Fraction(Kf_prev)
        - 16 * six * E0 * N0
        + (Fraction(416, 5) * six * six + Fraction(64, 5) * six) * E0 * E0
        - 24 * six * E0
    )


def kirchhoff_closed_k1(Kf0: Real, N0: int, E0: int, n: int) -> Fraction:
    six = Fraction(6) ** (n - 1)
    growth = Fraction(5) ** n - 1
    return (
        Fraction(30) ** n * Fraction(Kf0)
        - 4 * six * growth * E0 * N0
        + Fraction(16, 5) * six * growth * E0 * E0
        + 416 * Fraction(30) ** (n - 1) * (Fraction(6, 5) ** n - 1) * E0 * E0
        - 6 * six * growth * E0
    )


# Closed forms, general k

def mu_eta(k: int, n: int) -> tuple[Fraction, Fraction]:
    """Geometric-sum weights of the general Kemeny and Kirchhoff closed forms."""
    mu = Fraction(k + 5, 24 * k) * (Fraction(5 * (5 * k + 1), k + 5) ** n - 1)
    eta = -Fraction(k + 5, k) * (Fraction(5, k + 5) ** n - 1)
    return mu, eta


def xi(k: int, n: int) -> int:
    """sum_{i<n} (5k+1)^i."""
    return ((5 * k + 1) ** n - 1) // (5 * k)


def _kemeny_coefficients(k: int) -> tuple[Fraction, Fraction, Fraction, Fraction, Fraction]:
    """(a, B, C, D, F) with K_n = a K_{n-1} + (B (5k+1)^{n-1} + C) E0 - D N0 + F."""
    return (
        Fraction(25 * k + 5, k + 5),
        Fraction(8 * k * (5 * k + 21), 5 * (k + 5)),
        Fraction(32 * k, 5 * (k + 5)),
        Fraction(8 * k, k + 5),
        Fraction(4 * (5 * k * k - 23 * k), (k + 5) * (5 * k + 1)),
    )


def _kemeny_increment(N0: int, E0: int, k: int, n: int) -> Fraction:
    _, B, C, D, F = _kemeny_coefficients(k)
    return (B * Fraction(5 * k + 1) ** (n - 1) + C) * E0 - D * N0 + F


def kemeny_step_k(K_prev: Real, N0: int, E0: int, k: int, n: int) -> Fraction:
    """K(H^k_n) from K(H^k_{n-1}); valid for every k >= 1."""
    a = _kemeny_coefficients(k)[0]
    return a * Fraction(K_prev) + _kemeny_increment(N0, E0, k, n)


def kemeny_closed_generic(K0: Real, N0: int, E0: int, k: int, n: int) -> Fraction:
    a, B, C, D, F = _kemeny_coefficients(k)
    mu, eta = mu_eta(k, n)
    return (
        a**n * Fraction(K0)
        + (B * eta * Fraction(5 * k + 1) ** (n - 1) + C * mu) * E0
        - D * mu * N0
        + F * mu
    )


def kemeny_closed_k(K0: Real, N0: int, E0: int, k: int, n: int) -> Fraction:
    if k == 1:
        return kemeny_closed_k1(K0, N0, E0, n)
    return kemeny_closed_generic(K0, N0, E0, k, n)


def kirchhoff_step(Kf_prev: Real, N0: int, E0: int, k: int, n: int) -> Fraction:
    """Kf'(H^k_n) from Kf'(H^k_{n-1}), as 2 E_n times the Kemeny step."""
    a = _kemeny_coefficients(k)[0]
    E_n = (5 * k + 1) ** n * E0
    return (5 * k + 1) * a * Fraction(Kf_prev) + 2 * E_n * _kemeny_increment(N0, E0, k, n)


def kirchhoff_closed_generic(Kf0: Real, N0: int, E0: int, k: int, n: int) -> Fraction:
    mu, eta = mu_eta(k, n)
    r = Fraction(5 * k + 1)
    return (
        (5 * r * r / (k + 5)) ** n * Fraction(Kf0)
        - Fraction(16 * k, k + 5) * r**n * mu * E0 * N0
        + (
            Fraction(64 * k, 5 * (k + 5)) * mu * r**n
            + Fraction(16 * k * (5 * k + 21), 5 * (k + 5)) * eta * r ** (2 * n - 1)
        )
        * E0
        * E0
        + Fraction(8 * (5 * k * k - 23 * k), k + 5) * mu * r ** (n - 1) * E0
    )


def kirchhoff_closed_k(Kf0: Real, N0: int, E0: int, k: int, n: int) -> Fraction:
    if k == 1:
        return kirchhoff_closed_k1(Kf0, N0, E0, n)
    return kirchhoff_closed_generic(Kf0, N0, E0, k, n)


def kemeny_recursive(K0: Real, N0: int, E0: int, k: int, n: int) -> Fraction:
    K = Fraction(K0)
    for level in range(1, n + 1):
        K = kemeny_step_k1(K, N0, E0, level) if k == 1 else kemeny_step_k(K, N0, E0, k, level)
    return K


def kirchhoff_recursive(Kf0: Real, N0: int, E0: int, k: int, n: int) -> Fraction:
    Kf = Fraction(Kf0)
    for level in range(1, n + 1):
        if k == 1:
            Kf = kirchhoff_step_k1(Kf, N0, E0, level)
        else:
            Kf = kirchhoff_step(Kf, N0, E0, k, level)
    return Kf


# Spanning trees

def _integral_exponent(value: Fraction, label: str) -> int:
    if value.denominator != 1 or value < 0:
        raise ExponentIntegralityError(
            f"Exponent of {label} evaluates to {value}, not a non-negative integer"
        )
    return int(value)


def tau_step_exponents(N_prev: int, E_prev: int, k: int) -> tuple[tuple[int, int], ...]:
    """tau(H^k_n) / tau(H^k_{n-1}) = (k+5)^(N-1) * 5^(kE-N+1) in terms of the previous level."""
    return (
        (k + 5, _integral_exponent(Fraction(N_prev - 1), f"{k + 5}")),
        (5, _integral_exponent(Fraction(k * E_prev - N_prev + 1), "5")),
    )


def tau_closed_k1(tau0: int, N0: int, E0: int, n: int) -> BigExponentProduct:
    """tau(H_n(G)) = 5^a * 6^b * tau(G)."""
    six = 6**n - 1
    a = n * (Fraction(4, 5) * E0 - N0 + 1) + Fraction(1, 25) * six * E0
    b = n * (N0 - Fraction(4, 5) * E0 - 1) + Fraction(4, 25) * six * E0
    return BigExponentProduct(
        factors=((5, _integral_exponent(a, "5")), (6, _integral_exponent(b, "6"))),
        cofactor=tau0,
    )


def tau_closed_generic(tau0: int, N0: int, E0: int, k: int, n: int) -> BigExponentProduct:
    """tau(H^k_n(G)) = (k+5)^a * 5^b * tau(G)."""
    series = xi(k, n)
    a = n * (N0 - Fraction(4, 5) * E0 - 1) + Fraction(4, 5) * series * E0
    b = n * (Fraction(4, 5) * E0 - N0 + 1) + Fraction(5 * k - 4, 5) * series * E0
    return BigExponentProduct(
        factors=((k + 5, _integral_exponent(a, f"{k + 5}")), (5, _integral_exponent(b, "5"))),
        cofactor=tau0,
    )


def tau_closed_k(tau0: int, N0: int, E0: int, k: int, n: int) -> BigExponentProduct:
    if k == 1:
        return tau_closed_k1(tau0, N0, E0, n)
    return tau_closed_generic(tau0, N0, E0, k, n)


def tau_recursive(tau0: int, N0: int, E0: int, k: int, n: int) -> int:
    tau, N, E = tau0, N0, E0
    for _ in range(n):
        for base, exponent in tau_step_exponents(N, E, k):
            tau *= base**exponent
        N, E = N + 4 * k * E, (5 * k + 1) * E
    return tau


def tau_report(tau: BigExponentProduct) -> TauValue:
    """Exact digits up to ``TAU_EXACT_DIGITS``; beyond that only log10 and the factors."""
    render_exact = tau.digits() <= get_settings().TAU_EXACT_DIGITS
    if not render_exact:
        logger.info(f"tau has about {tau.digits()} digits; exact value omitted")
    try:
        return TauValue(
            exact=str(tau.value()) if render_exact else None,
            log10=tau.log10(),
            factored=str(tau),
            scientific=tau.scientific(),
        )
    except (ValueError, ArithmeticError) as e:
        raise TauOverflowError(f"Cannot render tau: {e}") from e


# Reports

def invariants_closed(g: Graph, p: TransformParams) -> InvariantReport:
    """Closed forms seeded with the oracle invariants of the base graph."""
    require_theory_input(g)
    N0, E0 = g.num_vertices, g.num_edges
    K0 = Fraction(kemeny_from_spectrum(spectrum_oracle(g)))
    tau = tau_closed_k(spanning_trees_matrix_tree(g), N0, E0, p.k, p.n)
    N, E = size_after(N0, E0, p.k, p.n)
    logger.info(f"Closed-form invariants for k={p.k}, n={p.n}: N={N}, E={E}")
    return InvariantReport(
        k=p.k,
        n=p.n,
        N=N,
        E=E,
        kemeny=float(kemeny_closed_k(K0, N0, E0, p.k, p.n)),
        kirchhoff=float(kirchhoff_closed_k(2 * E0 * K0, N0, E0, p.k, p.n)),
        tau=tau_report(tau),
        method="closed-form",
    )


def invariants_from_spectrum(g: Graph, p: TransformParams) -> InvariantReport:
    """Invariants from the iterated spectrum; tau is only available as log10."""
    s = spectrum_n(g, p)
    K = kemeny_from_spectrum(s)
    E = s.meta.num_edges
    return InvariantReport(
        k=p.k,
        n=p.n,
        N=s.meta.num_vertices,
        E=E,
        kemeny=K,
        kirchhoff=kirchhoff_from_kemeny(E, K),
        tau=TauValue(log10=tau_log10_from_spectrum(s, degree_log10_product(g, p.k, p.n))),
        method="spectrum",
    )


def invariants_oracle(g: Graph, p: TransformParams) -> InvariantReport:
    """Invariants of the explicitly built H^k_n(G)."""
    h = hexagonal_iter(g, p)
    K = kemeny_from_spectrum(spectrum_oracle(h))
    tau = spanning_trees_matrix_tree(h)
    return InvariantReport(
        k=p.k,
        n=p.n,
        N=h.num_vertices,
        E=h.num_edges,
        kemeny=K,
        kirchhoff=kirchhoff_from_kemeny(h.num_edges, K),
        tau=tau_report(BigExponentProduct(cofactor=tau)),
        method="oracle",
    )

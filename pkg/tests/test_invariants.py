"""Kemeny's constant, Kf' and spanning trees: spectra, closed forms and recursions."""
import math
import sys
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hexlap.errors import ExponentIntegralityError, SpectrumInputError, TauOverflowError
from hexlap.models import BigExponentProduct, GraphMeta, Spectrum, TransformParams
from hexlap.services.invariants import (
    invariants_closed,
    invariants_from_spectrum,
    invariants_oracle,
    kemeny_closed_generic,
    kemeny_closed_k,
    kemeny_closed_k1,
    kemeny_from_spectrum,
    kemeny_recursive,
    kemeny_step_k,
    kemeny_step_k1,
    kirchhoff_closed_generic,
    kirchhoff_closed_k,
    kirchhoff_closed_k1,
    kirchhoff_from_kemeny,
    kirchhoff_recursive,
    kirchhoff_step,
    kirchhoff_step_k1,
    mu_eta,
    tau_closed_generic,
    tau_closed_k,
    tau_closed_k1,
    tau_log10_from_spectrum,
    tau_recursive,
    tau_step_exponents,
    xi,
)
from hexlap.services.iterative import spectrum_n
from hexlap.services.oracle import spectrum_oracle

# (N0, E0) of small connected graphs: K2, P3, C5, C6, K4, K5, a 6-vertex tree
BASE_SIZES = [(2, 1), (3, 2), (5, 5), (6, 6), (4, 6), (5, 10), (6, 5)]

sizes = st.sampled_from(BASE_SIZES)
seeds = st.fractions(min_value=Fraction(1, 10), max_value=100, max_denominator=50)


def test_kemeny_from_spectrum_k2(k2):
    assert kemeny_from_spectrum(spectrum_oracle(k2)) == pytest.approx(0.5)


def test_kemeny_from_spectrum_c6(c6):
    assert kemeny_from_spectrum(spectrum_oracle(c6)) == pytest.approx(35 / 6, rel=1e-12)


def test_kemeny_from_iterated_spectrum_uses_exact_pairs(c6):
    s = spectrum_n(c6, TransformParams(k=1, n=1))
    assert kemeny_from_spectrum(s) == pytest.approx(403 / 6, rel=1e-10)


def test_kemeny_requires_simple_zero():
    meta = GraphMeta(num_vertices=4, num_edges=2, bipartite=True)
    s = Spectrum.assemble([(0.0, 2, None), (2.0, 2, None)], meta, 1e-9)
    with pytest.raises(SpectrumInputError):
        kemeny_from_spectrum(s)


def test_kirchhoff_from_kemeny():
    assert kirchhoff_from_kemeny(1, 0.5) == 1.0
    assert kirchhoff_from_kemeny(6, Fraction(35, 6)) == 70.0


class TestClosedFormsK1:
    def test_n0_returns_base(self):
        assert kemeny_closed_k1(Fraction(7, 3), 6, 6, 0) == Fraction(7, 3)
        assert kirchhoff_closed_k1(Fraction(7, 3), 6, 6, 0) == Fraction(7, 3)

    def test_table_seed(self):
        assert kemeny_closed_k1(Fraction(8, 9), 6, 6, 1) == Fraction(382, 9)
        assert kirchhoff_closed_k1(Fraction(32, 3), 6, 6, 1) == 3056
        assert kirchhoff_closed_k1(Fraction(32, 3), 6, 6, 8) == 1080685483941888

    def test_oracle_seed(self):
        assert kemeny_closed_k1(Fraction(35, 6), 6, 6, 1) == Fraction(403, 6)
        assert kirchhoff_closed_k1(70, 6, 6, 1) == 4836

    def test_one_step(self):
        assert kemeny_step_k1(Fraction(35, 6), 6, 6, 1) == Fraction(403, 6)
        assert kirchhoff_step_k1(70, 6, 6, 1) == 4836


class TestClosedFormsGeneral:
    def test_n0_returns_base(self):
        assert kemeny_closed_k(Fraction(7, 3), 6, 6, 3, 0) == Fraction(7, 3)
        assert kirchhoff_closed_k(Fraction(7, 3), 6, 6, 3, 0) == Fraction(7, 3)

    def test_table_seed(self):
        assert round(float(kemeny_closed_k(Fraction(8, 9), 6, 6, 2, 1)), 2) == 87.92
        assert round(float(kirchhoff_closed_k(Fraction(32, 3), 6, 6, 2, 1)), 2) == 11605.33

    def test_kirchhoff_identity_at_first_level(self):
        K0 = Fraction(35, 6)
        assert kirchhoff_closed_k(12 * K0, 6, 6, 2, 1) == 2 * 66 * kemeny_closed_k(K0, 6, 6, 2, 1)

    def test_one_step(self):
        K0 = Fraction(35, 6)
        assert kemeny_step_k(K0, 6, 6, 2, 1) == kemeny_closed_k(K0, 6, 6, 2, 1)
        assert kirchhoff_step(70, 6, 6, 2, 1) == kirchhoff_closed_k(70, 6, 6, 2, 1)


@pytest.mark.parametrize("k", range(1, 7))
def test_weights_at_first_level(k):
    assert mu_eta(k, 1) == (1, 1)
    assert mu_eta(k, 0) == (0, 0)
    assert xi(k, 1) == 1
    assert xi(k, 0) == 0


def test_weights_values():
    mu, eta = mu_eta(2, 2)
    assert mu == Fraction(62, 7)
    assert eta == Fraction(12, 7)
    assert xi(2, 3) == 133


@settings(max_examples=100, deadline=None)
@given(size=sizes, k=st.integers(1, 5), n=st.integers(0, 6), K0=seeds)
def test_closed_forms_match_recursions(size, k, n, K0):
    N0, E0 = size
    K = kemeny_closed_k(K0, N0, E0, k, n)
    assert K == kemeny_recursive(K0, N0, E0, k, n)
    Kf = kirchhoff_closed_k(2 * E0 * K0, N0, E0, k, n)
    assert Kf == kirchhoff_recursive(2 * E0 * K0, N0, E0, k, n)
    assert Kf == 2 * (5 * k + 1) ** n * E0 * K


@settings(max_examples=100, deadline=None)
@given(size=sizes, n=st.integers(0, 6), K0=seeds)
def test_generic_forms_hold_at_k1(size, n, K0):
    N0, E0 = size
    assert kemeny_closed_generic(K0, N0, E0, 1, n) == kemeny_closed_k1(K0, N0, E0, n)
    assert kirchhoff_closed_generic(K0, N0, E0, 1, n) == kirchhoff_closed_k1(K0, N0, E0, n)


class TestSpanningTrees:
    def test_n0(self):
        assert tau_closed_k1(6, 6, 6, 0).value() == 6
        assert tau_closed_k(6, 6, 6, 2, 0).value() == 6

    def test_hexagonal_c6(self):
        tau = tau_closed_k1(6, 6, 6, 1)
        assert tau.factors == ((5, 1), (6, 5))
        assert tau.value() == 233280

    def test_second_level_c6(self):
        tau = tau_closed_k1(6, 6, 6, 2)
        assert tau.value() == 5**8 * 6**35
        assert tau.scientific() == "6.71512031151728e+32"

    def test_k2_c6(self):
        assert tau_closed_k(6, 6, 6, 2, 1).value() == 7_878_281_250
        tau = tau_closed_k(6, 6, 6, 2, 2)
        assert tau.factors == ((7, 58), (5, 86))
        assert tau.scientific() == "8.04003508846168e+109"

    def test_deep_level_stays_factored(self):
        tau = tau_closed_k1(6, 6, 6, 5)
        assert tau.factors == ((5, 1865), (6, 7465))
        assert tau.digits() == 7114
        assert tau.scientific().endswith("e+7113")

    def test_hexagonal_k2_is_c6(self):
        assert tau_closed_k1(1, 2, 1, 1).value() == 6

    def test_generic_at_k1(self):
        for N0, E0 in BASE_SIZES:
            for n in range(4):
                generic = tau_closed_generic(3, N0, E0, 1, n).value()
                assert generic == tau_closed_k1(3, N0, E0, n).value()

    def test_recursive(self):
        assert tau_recursive(6, 6, 6, 1, 2) == 5**8 * 6**35
        assert tau_recursive(6, 6, 6, 2, 1) == 7_878_281_250

    def test_step_exponents(self):
        assert tau_step_exponents(6, 6, 1) == ((6, 5), (5, 1))
        assert tau_step_exponents(6, 6, 2) == ((7, 5), (5, 7))

    def test_rejects_sizes_outside_domain(self):
        with pytest.raises(ExponentIntegralityError):
            tau_closed_k1(1, 3, 1, 1)
        with pytest.raises(ExponentIntegralityError):
            tau_closed_k(1, 10, 2, 2, 1)


@settings(max_examples=100, deadline=None)
@given(
    N0=st.integers(2, 12),
    extra=st.integers(0, 30),
    k=st.integers(1, 5),
    n=st.integers(0, 5),
)
def test_tau_exponents_integral_for_real_graphs(N0, extra, k, n):
    E0 = min(N0 - 1 + extra, N0 * (N0 - 1) // 2)
    closed = tau_closed_k(1, N0, E0, k, n)

    stepped: Counter[int] = Counter()
    N, E = N0, E0
    for _ in range(n):
        for base, exponent in tau_step_exponents(N, E, k):
            stepped[base] += exponent
        N, E = N + 4 * k * E, (5 * k + 1) * E
    assert {b: e for b, e in closed.factors if e} == {b: e for b, e in stepped.items() if e}


def test_tau_log10_small_graphs(k2, c6):
    assert tau_log10_from_spectrum(spectrum_oracle(k2), 0.0) == pytest.approx(0.0, abs=1e-12)
    assert tau_log10_from_spectrum(spectrum_oracle(c6), 6 * math.log10(2)) == pytest.approx(
        math.log10(6), abs=1e-12
    )


def test_big_exponent_product():
    p = BigExponentProduct(factors=((5, 8), (6, 34)), cofactor=6)
    assert str(p) == "5^8 * 6^34 * 6"
    assert p.log10() == pytest.approx(math.log10(5**8 * 6**35), rel=1e-15)


class TestReports:
    def test_closed_k2_base(self, k2):
        report = invariants_closed(k2, TransformParams(k=1, n=0))
        assert report.kemeny == pytest.approx(0.5)
        assert report.kirchhoff == pytest.approx(1.0)
        assert report.tau.exact == "1"
        assert (report.N, report.E) == (2, 1)

    def test_closed_c6(self, c6):
        report = invariants_closed(c6, TransformParams(k=1, n=2))
        assert report.method == "closed-form"
        assert report.tau.exact == str(5**8 * 6**35)
        assert (report.N, report.E) == (174, 216)

    def test_exact_tau_capped(self, monkeypatch, c6):
        monkeypatch.setenv("HEXLAP_TAU_EXACT_DIGITS", "5")
        tau = invariants_closed(c6, TransformParams(k=1, n=1)).tau
        assert tau.exact is None
        assert tau.factored == "5^1 * 6^5 * 6"
        assert tau.scientific == "2.33280000000000e+5"
        assert tau.log10 == pytest.approx(math.log10(233280))

    def test_closed_deep_level(self, c6):
        report = invariants_closed(c6, TransformParams(k=1, n=5))
        assert report.tau.exact is None
        assert report.tau.log10 == pytest.approx(1865 * math.log10(5) + 7466 * math.log10(6))

    def test_unrenderable_tau_is_reported(self, monkeypatch, c6):
        monkeypatch.setenv("HEXLAP_TAU_EXACT_DIGITS", "100000")
        limit = sys.get_int_max_str_digits()
        sys.set_int_max_str_digits(4300)
        try:
            with pytest.raises(TauOverflowError):
                invariants_closed(c6, TransformParams(k=1, n=5))
        finally:
            sys.set_int_max_str_digits(limit)

    @pytest.mark.parametrize("k, n", [(1, 1), (1, 2), (2, 1)])
    def test_three_routes_agree(self, c6, k, n):
        p = TransformParams(k=k, n=n)
        closed = invariants_closed(c6, p)
        spectral = invariants_from_spectrum(c6, p)
        oracle = invariants_oracle(c6, p)
        assert closed.kemeny == pytest.approx(spectral.kemeny, rel=1e-6)
        assert oracle.kemeny == pytest.approx(spectral.kemeny, rel=1e-6)
        assert closed.tau.exact == oracle.tau.exact
        assert spectral.tau.exact is None
        assert spectral.tau.log10 == pytest.approx(closed.tau.log10, abs=1e-6)

    def test_kirchhoff_identity_enforced(self):
        from pydantic import ValidationError

        from hexlap.schemas import InvariantReport, TauValue

        with pytest.raises(ValidationError):
            InvariantReport(
                k=1, n=0, N=2, E=1, kemeny=0.5, kirchhoff=2.0,
                tau=TauValue(exact="1", log10=0.0), method="oracle",
            )

"""Tests for generating functions and their closed forms."""

from __future__ import annotations

import pytest

from wallcross import genfun
from wallcross.blocks import pvir
from wallcross.errors import ParameterError
from wallcross.genfun import Mode, SeriesPair
from wallcross.ring import ZERO
from wallcross.triples import triple_dimension, triple_motive_eps

G = 2
ORDER = 20


class TestFmot:
    def test_coefficients_sit_at_shifted_degree(self) -> None:
        series = genfun.fmot(G, 6)
        assert series.coeff(1) == triple_motive_eps(G, -1)
        assert series.coeff(5) == triple_motive_eps(G, 3)

    def test_even_coefficients_vanish(self) -> None:
        series = genfun.fmot(G, 8)
        assert all(series.coeff(k) == ZERO for k in range(0, 8, 2))

    def test_closed_form_agrees(self) -> None:
        report = genfun.fmot_check(G, 14)
        assert report.passed, report.summary()

    def test_mode_accepts_strings(self) -> None:
        assert genfun.fmot(G, 4, "closed") == genfun.fmot(G, 4, Mode.CLOSED)


class TestFvir:
    def test_direct_is_pvir_of_fmot(self) -> None:
        series = genfun.fvir(G, 6)
        assert series.coeff(5) == pvir(triple_motive_eps(G, 3), triple_dimension(G, 3))
        assert series.coeff(3) == pvir(triple_motive_eps(G, 1), triple_dimension(G, 1))

    def test_cleared_pair(self) -> None:
        pair = genfun.fvir_cleared(G, 12)
        assert pair.agree
        assert pair.cleared_factors == ("2", "1-t^2")

    def test_closed_mode_divides_back(self) -> None:
        assert genfun.fvir(G, 12, Mode.CLOSED) == genfun.fvir(G, 12, Mode.DIRECT)

    def test_series_pair_rejects_mixed_orders(self) -> None:
        with pytest.raises(ValueError):
            SeriesPair(genfun.fmot(G, 4), genfun.fmot(G, 6))


class TestQvir:
    def test_polynomial_of_bounded_degree(self) -> None:
        q = genfun.qvir(G, ORDER)
        assert q.order == 8 * G - 4
        assert q.degree() is not None and q.degree() <= 8 * G - 5

    def test_needs_enough_order(self) -> None:
        with pytest.raises(ParameterError):
            genfun.qvir(G, 8 * G - 3)

    def test_check(self) -> None:
        report = genfun.qvir_check(G, ORDER)
        assert report.passed, report.summary()

    def test_motivic_version(self) -> None:
        report = genfun.qmot_check(G, ORDER)
        assert report.passed, report.summary()


class TestCharacterVariety:
    def test_constant_term(self) -> None:
        assert genfun.char_variety_mixed_hodge(G).coeff(0) == 1

    def test_check(self) -> None:
        report = genfun.hmb_check(G)
        assert report.passed, report.summary()

    def test_v_series(self) -> None:
        report = genfun.v_check(G, ORDER)
        assert report.passed, report.summary()

    def test_higgs_poincare(self) -> None:
        report = genfun.higgs_poincare_check(G)
        assert report.passed, report.summary()

    def test_g_series_is_odd(self) -> None:
        series = genfun.g_series(G, 10)
        assert all(series.coeff(k) == ZERO for k in range(0, 10, 2))


class TestCompare:
    def test_ranges_agree(self) -> None:
        report = genfun.compare_F_G(G, ORDER)
        assert report.passed, report.summary()
        assert set(report.notes["middle"]) == {"q^3", "q^5"}

    def test_needs_enough_order(self) -> None:
        with pytest.raises(ParameterError):
            genfun.compare_F_G(G, 8 * G - 5)


def test_default_order() -> None:
    assert genfun.default_order(3) == 30

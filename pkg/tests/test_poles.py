"""Tests for the moduli of triples with poles."""

from __future__ import annotations

import pytest

from wallcross.blocks import is_monic_top, pvir, sym_power
from wallcross.errors import DegreeTooLow, ParameterError, PoleOrderTooSmall
from wallcross.triples import Regime, poles_dimension, poles_limit_check, poles_motive

from .helpers import L, curve


class TestPolesMotive:
    def test_smallest_case_agrees_in_both_regimes(self) -> None:
        expected = L**7 * curve(2) ** 2 + L**7 * sym_power(2, 3)
        assert poles_motive(2, 0, 1, Regime.EPS) == expected
        assert poles_motive(2, 0, 1, "infty") == expected

    @pytest.mark.parametrize("gamma", [1, 2, 3])
    def test_top_class_is_monic(self, gamma: int) -> None:
        motive = poles_motive(2, 1, gamma)
        assert is_monic_top(motive, poles_dimension(2, 1, gamma))

    def test_constant_poincare_coefficient(self) -> None:
        p = pvir(poles_motive(2, 1, 4), poles_dimension(2, 1, 4))
        assert p.coefficient(et=0) == 1

    def test_infty_needs_large_gamma(self) -> None:
        with pytest.raises(PoleOrderTooSmall):
            poles_motive(2, 1, 1, Regime.INFTY)

    def test_needs_poles(self) -> None:
        with pytest.raises(ParameterError):
            poles_motive(2, 1, 0)

    def test_empty_degree(self) -> None:
        with pytest.raises(DegreeTooLow):
            poles_motive(2, -4, 1)

    def test_dimension(self) -> None:
        assert poles_dimension(2, 0, 1) == 10


class TestLimit:
    def test_stabilizes(self) -> None:
        report = poles_limit_check(2, 6, 12, d=1)
        assert report.passed, report.summary()
        assert report.notes["checked"] == ["eps:11", "eps:12", "infty:11", "infty:12"]

    def test_eps_only(self) -> None:
        report = poles_limit_check(2, 4, 8, d=0, regimes=(Regime.EPS,))
        assert report.passed, report.summary()

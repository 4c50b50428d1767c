"""Tests for triple moduli: index sets, flip loci, motives and strata."""

from __future__ import annotations

import pytest

from wallcross.blocks import is_monic_top, jacobian, proj_space, pvir, sym_power
from wallcross.chambers import Sign, critical_values
from wallcross.errors import (
    DegreeTooLow,
    IndexNotInSet,
    NotAWall,
    ParameterError,
    ParityMismatch,
)
from wallcross.pairs import pair_motive
from wallcross.ring import ZERO
from wallcross.triples import (
    IndexKind,
    IndexPair,
    ModuliKey,
    Regime,
    attract_type1,
    b_plus_sum,
    b_sum_check,
    even_strata,
    flip_B_minus,
    flip_NSW,
    flip_SW,
    flip_W,
    higgs_motive_extract,
    index_set,
    infty_strata,
    is_member,
    moteven_check,
    smooth_cell,
    spf,
    structure_check,
    triple_dimension,
    triple_motive_chamber,
    triple_motive_eps,
)

from .helpers import L, T, curve


class TestModuliKey:
    def test_dimensions(self) -> None:
        assert ModuliKey(2, 1).dimension == 8
        assert ModuliKey(2, 1, gamma=2).dimension == 1 + 6 + 8

    def test_negative_degree_is_smooth(self) -> None:
        assert ModuliKey(2, -1).smooth

    def test_large_odd_degree_is_smooth(self) -> None:
        assert ModuliKey(2, 5).smooth
        assert not ModuliKey(2, 3).smooth
        assert not ModuliKey(2, 4).smooth

    def test_poles_regimes(self) -> None:
        assert ModuliKey(2, 1, gamma=1).smooth
        assert not ModuliKey(2, 1, gamma=3, regime=Regime.INFTY).smooth

    def test_rejects_negative_chamber(self) -> None:
        with pytest.raises(ParameterError):
            ModuliKey(2, 1, chamber=-1)

    def test_nonempty_and_last_chamber(self) -> None:
        assert ModuliKey(2, -2).nonempty
        assert not ModuliKey(2, -3).nonempty
        assert ModuliKey(2, 3, chamber=2).is_last_chamber


class TestIndexSets:
    def test_first_family_odd(self) -> None:
        assert index_set(2, 1, "I1o") == [IndexPair(0, 1, IndexKind.I1_ODD)]

    def test_second_family_negative_degree(self) -> None:
        assert index_set(2, -1, IndexKind.I2_ODD) == [IndexPair(-1, 0, IndexKind.I2_ODD)]

    def test_first_family_even_empty_at_zero(self) -> None:
        assert index_set(2, 0, IndexKind.I1_EVEN) == []

    def test_offdiagonal_drops_the_diagonal(self) -> None:
        full = index_set(2, 2, IndexKind.I2_EVEN)
        offdiag = index_set(2, 2, IndexKind.I2_EVEN_OFFDIAG)
        assert (1, 1) in [(p.d1, p.d2) for p in full]
        assert [(p.d1, p.d2) for p in offdiag] == [(p.d1, p.d2) for p in full if p.d1 != 1]

    def test_ascending_in_d1(self) -> None:
        pairs = index_set(3, 5, IndexKind.I2_ODD)
        assert [p.d1 for p in pairs] == sorted(p.d1 for p in pairs)
        assert all(p.d == 5 for p in pairs)

    def test_parity_mismatch(self) -> None:
        with pytest.raises(ParityMismatch):
            index_set(2, 1, IndexKind.I1_EVEN)

    def test_poles_sets_need_poles(self) -> None:
        with pytest.raises(ParameterError):
            index_set(2, 1, IndexKind.POLES_1)

    def test_membership_wrong_parity_is_false(self) -> None:
        assert is_member(2, 0, 1, IndexKind.I1_ODD)
        assert not is_member(2, 0, 2, IndexKind.I1_ODD)

    def test_cosection_degree(self) -> None:
        assert IndexPair(0, 1, IndexKind.I1_ODD).cosection_degree(2) == 1
        assert IndexPair(0, 1, IndexKind.POLES_1).cosection_degree(2, gamma=3) == 4


class TestFlips:
    def test_negative_degree_loci_vanish(self) -> None:
        for sign in Sign:
            assert flip_W(2, -1, 1, sign) == ZERO
        assert flip_B_minus(2, -1, 1) == ZERO

    def test_w_plus_at_top_wall(self) -> None:
        expected = L**4 * (1 + L) * jacobian(2) + L**4 * sym_power(2, 3)
        assert flip_W(2, 3, 3, Sign.PLUS) == expected

    def test_w_minus_below_top_wall(self) -> None:
        assert flip_W(2, 3, 1, Sign.MINUS) == L**4 * curve(2) * jacobian(2) * proj_space(2)

    def test_not_a_wall(self) -> None:
        with pytest.raises(NotAWall):
            flip_W(2, 3, 2, Sign.PLUS)
        with pytest.raises(NotAWall):
            flip_W(2, 3, -1, Sign.PLUS)

    def test_nonsplit_plus_vanishes_above_canonical_degree(self) -> None:
        assert flip_NSW(2, 3, 3, Sign.PLUS) == ZERO

    def test_nonsplit_plus_at_canonical_degree(self) -> None:
        # wall 2g-2: only the trivial line bundle has a section, [S^0] = 1
        assert flip_NSW(2, 4, 2, Sign.PLUS) == L**4 * curve(2)
        assert flip_NSW(3, 6, 4, Sign.PLUS) == L**6 * sym_power(3, 1)
        whole = flip_W(2, 4, 2, Sign.PLUS)
        assert flip_SW(2, 4, 2, Sign.PLUS) == whole - L**4 * curve(2)

    def test_split_is_the_complement(self) -> None:
        whole = flip_W(3, 5, 1, Sign.MINUS)
        assert flip_SW(3, 5, 1, Sign.MINUS) + flip_NSW(3, 5, 1, Sign.MINUS) == whole

    def test_b_minus_at_top_wall(self) -> None:
        # at k = 0 the geometric factor is -1 and the two lines cancel
        assert flip_B_minus(2, 3, 3) == ZERO


class TestAttractingSets:
    def test_type1_cell(self) -> None:
        c = curve(2)
        assert attract_type1(2, 0, 1) == L**5 * c + (L**6 - L**5) * c

    def test_type1_negative_d1(self) -> None:
        assert attract_type1(2, -1, 2) == ZERO

    def test_type1_outside_first_family(self) -> None:
        with pytest.raises(IndexNotInSet):
            attract_type1(2, 2, -1)

    def test_spf_one_plus(self) -> None:
        assert spf(2, 0, 1, "1+") == L**6 * curve(2)

    def test_spf_two_plus_needs_d1_above_d2(self) -> None:
        with pytest.raises(IndexNotInSet):
            spf(2, 1, 2, "2+")

    def test_spf_two_plus_top_wall(self) -> None:
        # [S^{2g-2+d2-d1}] = [S^-1] vanishes, only the Jacobian survives
        assert spf(2, 3, 0, "2+") == L**4 * proj_space(3) * jacobian(2)


class TestTripleMotive:
    def test_degree_minus_one(self) -> None:
        motive = triple_motive_eps(2, -1)
        assert motive == L**5 * curve(2)
        assert is_monic_top(motive, triple_dimension(2, -1))

    def test_first_empty_degree(self) -> None:
        assert triple_motive_eps(2, -3) == ZERO

    def test_below_first_empty_degree(self) -> None:
        with pytest.raises(DegreeTooLow):
            triple_motive_eps(2, -4)

    def test_lowest_nonempty_degree(self) -> None:
        # d = 2 - 2g: a single cell, both symmetric powers a point
        assert triple_motive_eps(2, -2) == L**5

    def test_negative_degree_is_chamber_independent(self) -> None:
        assert triple_motive_chamber(2, -1, 3) == triple_motive_eps(2, -1)

    def test_one_wall(self) -> None:
        expected = (
            triple_motive_eps(2, 1) - flip_W(2, 1, 1, Sign.PLUS) + flip_W(2, 1, 1, Sign.MINUS)
        )
        assert triple_motive_chamber(2, 1, 1) == expected

    def test_walls_above_degree_change_nothing(self) -> None:
        assert triple_motive_chamber(2, 1, 5) == triple_motive_chamber(2, 1, 1)

    def test_negative_chamber(self) -> None:
        with pytest.raises(ParameterError):
            triple_motive_chamber(2, 1, -1)

    @pytest.mark.parametrize(("g", "d"), [(2, 3), (2, 4), (2, 5), (3, 5)])
    def test_walk_up_and_back_down(self, g: int, d: int) -> None:
        walls = critical_values(d)
        motive = triple_motive_chamber(g, d, len(walls))
        for chamber in range(len(walls), 0, -1):
            wall = walls[chamber - 1]
            motive = motive + flip_W(g, d, wall, Sign.PLUS) - flip_W(g, d, wall, Sign.MINUS)
            assert motive == triple_motive_chamber(g, d, chamber - 1)
        assert motive == triple_motive_eps(g, d)

    def test_smooth_cell(self) -> None:
        assert smooth_cell(2, -1, 0) == L**5 * curve(2)


class TestEvenStrata:
    def test_degree_zero(self) -> None:
        strata = even_strata(2, 0)
        assert strata.m_ss == ZERO
        assert strata.x1 == ZERO
        assert strata.x2 == L**5 * jacobian(2) + L**4 * (2 * L**2 - 1)

    def test_odd_degree(self) -> None:
        with pytest.raises(ParityMismatch):
            even_strata(2, 1)

    def test_negative_degree(self) -> None:
        with pytest.raises(ParameterError):
            even_strata(2, -2)

    def test_assembly(self) -> None:
        report = moteven_check(2, 0)
        assert report.passed, report.summary()


class TestInftyStrata:
    def test_smooth_part(self) -> None:
        strata = infty_strata(2, 3, 1, 2)
        assert strata.smooth_cell == smooth_cell(2, 1, 2)
        assert strata.sw_plus == ZERO

    def test_top_wall(self) -> None:
        strata = infty_strata(2, 3, 3, 0)
        assert strata.nsw_plus == ZERO
        assert strata.spf_2plus == spf(2, 3, 0, "2+")
        assert strata.sw_plus == flip_W(2, 3, 3, Sign.PLUS)

    def test_diagonal(self) -> None:
        assert infty_strata(2, 0, 0, 0).x2 == even_strata(2, 0).x2

    def test_splitting_must_add_up(self) -> None:
        with pytest.raises(ParameterError):
            infty_strata(2, 3, 1, 1)

    @pytest.mark.parametrize("d", [-2, -1, 0, 1, 2, 3, 4, 5, 6, 8])
    def test_decomposition(self, d: int) -> None:
        report = b_sum_check(2, d)
        assert report.passed, report.summary()

    @pytest.mark.parametrize("d", [2, 4, 6])
    def test_decomposition_genus_three_even(self, d: int) -> None:
        report = b_sum_check(3, d)
        assert report.passed, report.summary()

    def test_b_plus_sum_even_degree_uses_semistable_strata(self) -> None:
        strata = even_strata(2, 2)
        pairs = pair_motive(2, 2, 0)
        expected = L**5 * (pairs - strata.m_ss) + strata.x1 + flip_B_minus(2, 2, 2)
        assert b_plus_sum(2, 2) == expected
        assert strata.m_ss != ZERO

    def test_b_plus_sum_degree_zero_has_no_walls(self) -> None:
        assert b_plus_sum(2, 0) == L**5 * pair_motive(2, 0, 0)

    def test_nonsplit_plus_at_canonical_degree(self) -> None:
        assert infty_strata(2, 4, 3, 1).nsw_plus == L**4 * curve(2)


class TestStructure:
    @pytest.mark.parametrize("d", [-2, -1, 5])
    def test_smooth_cases(self, d: int) -> None:
        report = structure_check(2, d)
        assert report.passed, report.summary()

    def test_singular_case_rejected(self) -> None:
        with pytest.raises(ParameterError):
            structure_check(2, 3)

    def test_poincare_of_negative_degree(self) -> None:
        poincare = pvir(triple_motive_eps(2, -1), triple_dimension(2, -1))
        assert poincare == 1 + 4 * T + T**2


def test_higgs_motive_extract() -> None:
    higgs, report = higgs_motive_extract(2)
    assert report.passed, report.summary()
    assert is_monic_top(higgs, 10)

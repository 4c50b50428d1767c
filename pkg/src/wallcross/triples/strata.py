"""Strata of the singular even-degree moduli and of the unbounded chamber."""

from __future__ import annotations

import logging
from dataclasses import dataclass

from ..blocks import (
    check_genus,
    is_monic_top,
    jacobian,
    lefschetz,
    proj_space,
    pvir,
    sym2,
    sym_power,
)
from ..chambers import Sign, critical_values, last_chamber
from ..errors import ParameterError, ParityMismatch
from ..pairs import pair_motive
from ..report import CheckReport, failed, passed
from ..ring import ZERO, LaurentPoly
from .flips import attract_type1, flip_B_minus, flip_NSW, flip_SW, spf
from .indices import index_set
from .motive import smooth_cell, triple_dimension, triple_motive_chamber, triple_motive_eps
from .types import IndexKind

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EvenStrata:
    x1: LaurentPoly
    x2: LaurentPoly
    m_ss: LaurentPoly


@dataclass(frozen=True)
class InftyStrata:
    """Classes attached to one splitting (d1, d2) of the unbounded chamber."""

    smooth_cell: LaurentPoly = ZERO
    nsw_plus: LaurentPoly = ZERO
    sw_plus: LaurentPoly = ZERO
    spf_2plus: LaurentPoly = ZERO
    x2: LaurentPoly = ZERO


def even_strata(g: int, d: int) -> EvenStrata:
    """Strictly semistable strata for even d >= 0."""
    check_genus(g)
    if d % 2:
        raise ParityMismatch(f"even strata need even degree, got d={d}")
    if d < 0:
        raise ParameterError(f"even strata need d >= 0, got d={d}")
    half = d // 2
    s = sym_power(g, half)
    s_sym2 = sym2(s)
    j = jacobian(g)
    m_ss = j * s * proj_space(half - 1) - s * s + s_sym2
    top = lefschetz(4 * g - 3)
    x1 = (
        (lefschetz(4 * g - 3 + half) - lefschetz(4 * g - 2)) * s
        + top * (j * s * proj_space(half - 1) - s * s)
        + lefschetz(4 * g - 2) * s_sym2
    )
    x2 = s * j * proj_space(g - 2) * top + s * lefschetz(3 * g - 2) * (
        lefschetz(2 * g - 2) + lefschetz(g) - 1
    )
    return EvenStrata(x1=x1, x2=x2, m_ss=m_ss)


def infty_strata(g: int, d: int, d1: int, d2: int) -> InftyStrata:
    check_genus(g)
    if d1 + d2 != d:
        raise ParameterError(f"splitting ({d1}, {d2}) does not add up to d={d}")
    if d1 < d2:
        return InftyStrata(smooth_cell=smooth_cell(g, d1, d2))
    if d1 == d2:
        return InftyStrata(x2=even_strata(g, d).x2 if d >= 0 else ZERO)
    wall = d1 - d2
    return InftyStrata(
        nsw_plus=flip_NSW(g, d, wall, Sign.PLUS),
        sw_plus=flip_SW(g, d, wall, Sign.PLUS),
        spf_2plus=spf(g, d1, d2, "2+"),
    )


def b_plus_sum(g: int, d: int) -> LaurentPoly:
    """Sum over walls of [B^{d,+}]; individual walls are not determined.

    Equals [F^{1+}] plus the B- sum. For even d >= 0 the pairs with a strictly
    semistable bundle lie under [X1] instead of an affine fibre.
    """
    check_genus(g)
    top = lefschetz(4 * g - 3)
    if d % 2 == 0 and d >= 0:
        strata = even_strata(g, d)
        total = top * (pair_motive(g, d, 0) - strata.m_ss) + strata.x1
    else:
        total = top * pair_motive(g, d, 0)
    for wall in critical_values(d):
        total = total + flip_B_minus(g, d, wall)
    return total


def b_sum_check(g: int, d: int) -> CheckReport:
    """Decompose [M_inf] into smooth cells, the diagonal, B+, SW+ and SPF 2+."""
    name = f"b-sum g={g} d={d}"
    m_inf = triple_motive_chamber(g, d, last_chamber(d))
    total = b_plus_sum(g, d)
    for pair in index_set(g, d, IndexKind.I2_INFTY):
        if pair.d1 > pair.d2:
            continue
        strata = infty_strata(g, d, pair.d1, pair.d2)
        total = total + strata.smooth_cell + strata.x2
    for wall in critical_values(d):
        strata = infty_strata(g, d, (d + wall) // 2, (d - wall) // 2)
        total = total - strata.sw_plus + strata.spf_2plus
    logger.debug("b-sum g=%d d=%d walls=%d", g, d, len(critical_values(d)))
    if total != m_inf:
        return failed(name, "M_inf", m_inf, total)
    return passed(name, walls=len(critical_values(d)))


def moteven_check(g: int, d: int) -> CheckReport:
    """Even-degree assembly against its strata, plus the structure it must have.

    [M_eps] = L^{4g-3}([M_eps-pairs] - [M_ss]) + cells + [X1] + [X2]; the top
    class is monic and the unbounded chamber has an integral P^vir. Its sign
    is only recorded: the even-degree spaces are singular.
    """
    name = f"moteven g={g} d={d}"
    strata = even_strata(g, d)
    motive = triple_motive_eps(g, d)
    cells = ZERO
    for pair in index_set(g, d, IndexKind.I1_EVEN):
        cells = cells + attract_type1(g, pair.d1, pair.d2)
    for pair in index_set(g, d, IndexKind.I2_EVEN_OFFDIAG):
        cells = cells + smooth_cell(g, pair.d1, pair.d2)
    top = lefschetz(4 * g - 3)
    assembled = top * (pair_motive(g, d, 0) - strata.m_ss) + cells + strata.x1 + strata.x2
    if assembled != motive:
        return failed(name, "strata assembly", motive, assembled)
    dim = triple_dimension(g, d)
    if not is_monic_top(motive, dim):
        return failed(name, "top class", f"(xy)^{dim}", motive)
    poincare = pvir(triple_motive_chamber(g, d, last_chamber(d)), dim)
    if not poincare.is_integral():
        return failed(name, "P^vir M_inf", "integral", poincare)
    return passed(name, dimension=dim, nonnegative_at_infinity=poincare.is_nonnegative())

"""Bradlow pairs: flip loci, the chamber walk and the closed-form oracle."""

from __future__ import annotations

import logging
from functools import lru_cache

from .blocks import L, check_genus, jacobian, lefschetz, proj_space, pvir, sym_power, zeta_series
from .chambers import Sign, check_chamber, check_wall, critical_values
from .report import CheckReport, failed, passed
from .ring import ZERO, LaurentPoly, QSeries, exact_div, raw, series_expand, var

logger = logging.getLogger(__name__)


def pair_dimension(g: int, d: int) -> int:
    return d + 2 * g - 2


def pair_flip(g: int, d: int, wall: int, sign: Sign | str) -> LaurentPoly:
    """[PW^{d,+}] = [S^k][J][CP^(wall+g-2)], [PW^{d,-}] = [S^k][J][CP^(k-1)], k = (d-wall)/2."""
    check_genus(g)
    check_wall(d, wall)
    k = (d - wall) // 2
    if Sign(sign) is Sign.PLUS:
        return sym_power(g, k) * jacobian(g) * proj_space(wall + g - 2)
    return sym_power(g, k) * jacobian(g) * proj_space(k - 1)


@lru_cache(maxsize=None)
def pair_motive(g: int, d: int, chamber: int = 0) -> LaurentPoly:
    """Motive of the pair moduli space in a chamber.

    Walks down from the empty chamber above sigma = d:
    [M_{sigma-}] = [M_{sigma+}] + [PW+] - [PW-].
    """
    check_genus(g)
    if d < 0:
        return ZERO
    check_chamber(d, chamber)
    motive = ZERO
    for wall in reversed(critical_values(d)[chamber:]):
        motive = motive + pair_flip(g, d, wall, Sign.PLUS) - pair_flip(g, d, wall, Sign.MINUS)
    return motive


@lru_cache(maxsize=None)
def pair_genfun_motivic(g: int, order: int) -> QSeries:
    """Sum of [M_eps^{2,2n+1}] u^n from its closed form.

    L^g [J] Z(C,u) / ((L-1)(1-L^2 u)) - [J] Z(C,Lu) / ((L-1)(1-u)), with the
    common (L-1) divided out coefficientwise.
    """
    check_genus(g)
    x, y, u = raw("x"), raw("y"), raw("q")
    zeta = zeta_series(g, order)
    first = series_expand(zeta * (lefschetz(g) * jacobian(g)), [1 - (x * y) ** 2 * u], order, "u")
    second = series_expand(zeta.rescale(L) * jacobian(g), [1 - u], order, "u")
    return (first - second).map_coeffs(lambda _, c: exact_div(c, L - 1))


def pair_poincare(g: int, d: int) -> LaurentPoly:
    """Poincare polynomial of the pair moduli space in the first chamber.

    P(S^inf) * sum_i (t^(2i) - t^(2g-2+2d-4i)) P(S^i), with the (1 - t^2) of
    P(S^inf) = (1+t)^(2g) / (1-t^2) divided out exactly. The sum runs over
    i < d/2: each i is the wall d - 2i, and d - 2i = 0 is not a wall.
    """
    check_genus(g)
    t = var("t")
    total = ZERO
    for i in range((d + 1) // 2):
        weight = t ** (2 * i) - t ** (2 * g - 2 + 2 * d - 4 * i)
        total = total + weight * pvir(sym_power(g, i), i)
    return exact_div((1 + t) ** (2 * g) * total, 1 - t**2)


def pairs_check(g: int, max_d: int) -> CheckReport:
    """Walk vs closed form for odd d <= max_d, and P^vir of the walk vs pair_poincare."""
    name = f"pairs g={g}"
    genfun = pair_genfun_motivic(g, (max_d - 1) // 2 + 1)
    for d in range(1, max_d + 1):
        motive = pair_motive(g, d, 0)
        if d % 2 == 1:
            closed = genfun.coeff((d - 1) // 2)
            if motive != closed:
                return failed(name, f"motive d={d}", closed, motive)
        poincare = pair_poincare(g, d)
        walked = pvir(motive, pair_dimension(g, d))
        if walked != poincare:
            return failed(name, f"poincare d={d}", poincare, walked)
        if not walked.is_nonnegative():
            return failed(name, f"nonnegativity d={d}", "nonnegative", walked)
        logger.debug("pairs g=%d d=%d agree", g, d)
    return passed(name, max_d=max_d)

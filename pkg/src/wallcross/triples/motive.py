"""Motives of rank-2 triple moduli spaces: the epsilon assembly and the chamber walk."""

from __future__ import annotations

import logging
from functools import lru_cache

from ..blocks import (
    L,
    check_genus,
    is_monic_top,
    jacobian,
    lefschetz,
    proj_space,
    pvir,
    sym2,
    sym_power,
)
from ..chambers import Sign, critical_values
from ..errors import DegreeTooLow, ParameterError
from ..pairs import pair_motive
from ..report import CheckReport, failed, passed
from ..ring import ZERO, LaurentPoly, exact_div
from .flips import attract_type1, flip_W
from .indices import first_family, index_set, second_family
from .types import ModuliKey

logger = logging.getLogger(__name__)


def triple_dimension(g: int, d: int) -> int:
    return d + 6 * g - 5


def smooth_cell(g: int, d1: int, d2: int) -> LaurentPoly:
    """L^{4g-3}[S^d2][S^{d1-d2+2g-2}], a cell of the second family."""
    return (
        lefschetz(4 * g - 3)
        * sym_power(g, d2)
        * sym_power(g, d1 - d2 + 2 * g - 2)
    )


def _even_extras(g: int, d: int) -> LaurentPoly:
    s = sym_power(g, d // 2)
    if not s:
        return ZERO
    top = lefschetz(4 * g - 3)
    return (
        (L - 1) * top * sym2(s)
        + top * s * jacobian(g) * proj_space(g - 2)
        + s * lefschetz(3 * g - 2) * (lefschetz(d // 2 + g - 1) + lefschetz(2 * g - 2) - 1)
    )


@lru_cache(maxsize=None)
def triple_motive_eps(g: int, d: int) -> LaurentPoly:
    """Motive of the triple moduli space in the first chamber.

    Zero at d = 1 - 2g, the first empty degree.
    """
    check_genus(g)
    if d < 1 - 2 * g:
        raise DegreeTooLow(f"triple moduli space is empty for d={d} < {2 - 2 * g}")
    if d < 2 - 2 * g:
        return ZERO
    motive = lefschetz(4 * g - 3) * pair_motive(g, d, 0)
    for pair in index_set(g, d, first_family(d)):
        motive = motive + attract_type1(g, pair.d1, pair.d2)
    for pair in index_set(g, d, second_family(d)):
        motive = motive + smooth_cell(g, pair.d1, pair.d2)
    if d % 2 == 0:
        motive = motive + _even_extras(g, d)
    logger.debug("assembled triple motive g=%d d=%d", g, d)
    return motive


def _eps_or_empty(g: int, d: int) -> LaurentPoly:
    return ZERO if d < 2 - 2 * g else triple_motive_eps(g, d)


@lru_cache(maxsize=None)
def triple_motive_chamber(g: int, d: int, chamber: int) -> LaurentPoly:
    """Walk upward from the first chamber: [M_{sigma+}] = [M_{sigma-}] - [W+] + [W-].

    Chamber indices past the last wall all give [M_inf].
    """
    if chamber < 0:
        raise ParameterError(f"chamber must be nonnegative, got {chamber}")
    motive = triple_motive_eps(g, d)
    for wall in critical_values(d)[:chamber]:
        motive = motive - flip_W(g, d, wall, Sign.PLUS) + flip_W(g, d, wall, Sign.MINUS)
    return motive


def higgs_motive_extract(g: int) -> tuple[LaurentPoly, CheckReport]:
    """Motive of the rank-2 degree-1 Higgs moduli space.

    [M_eps(2n+1)] - L^{2n-2g+3}[M_eps(4g-5-2n)] = [M^{2,1}][CP^{2n-2g+2}] for
    n >= g-1; n = g-1 defines [M^{2,1}] and n = g, g+1, g+2 must agree.
    """
    check_genus(g)
    higgs = triple_motive_eps(g, 2 * g - 1) - L * triple_motive_eps(g, 2 * g - 3)
    name = f"higgs extract g={g}"
    for n in range(g, g + 3):
        lhs = _eps_or_empty(g, 2 * n + 1) - lefschetz(2 * n - 2 * g + 3) * _eps_or_empty(
            g, 4 * g - 5 - 2 * n
        )
        quotient = exact_div(lhs, proj_space(2 * n - 2 * g + 2))
        if quotient != higgs:
            return higgs, failed(name, f"n={n}", higgs, quotient)
    return higgs, passed(name, checked_n=[g, g + 1, g + 2])


def structure_check(g: int, d: int) -> CheckReport:
    """Monic top class and nonnegative integral P^vir for a smooth first chamber.

    For d < 0 also checks that every chamber index gives the same motive.
    """
    name = f"structure g={g} d={d}"
    if not ModuliKey(g, d).smooth:
        raise ParameterError(f"d={d} is not a smooth case for g={g}")
    motive = triple_motive_eps(g, d)
    dim = triple_dimension(g, d)
    if not is_monic_top(motive, dim):
        return failed(name, "top class", f"(xy)^{dim}", motive)
    poincare = pvir(motive, dim)
    if not (poincare.is_integral() and poincare.is_nonnegative()):
        return failed(name, "P^vir", "nonnegative integers", poincare)
    if d < 0:
        for chamber in (1, 2):
            walked = triple_motive_chamber(g, d, chamber)
            if walked != motive:
                return failed(name, f"chamber {chamber}", motive, walked)
    return passed(name, dimension=dim)

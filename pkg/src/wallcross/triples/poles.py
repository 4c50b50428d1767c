"""Triples whose Higgs field has poles of order gamma at a fixed point."""

from __future__ import annotations

import logging
from functools import lru_cache

from ..blocks import check_genus, lefschetz, pvir, sym_power
from ..errors import DegreeTooLow, ParameterError, PoleOrderTooSmall
from ..pairs import pair_motive
from ..report import CheckReport, failed, passed
from ..ring import ZERO, LaurentPoly, var
from .indices import index_set
from .types import IndexKind, Regime

logger = logging.getLogger(__name__)


def poles_dimension(g: int, d: int, gamma: int) -> int:
    return d + 6 * g - 6 + 4 * gamma


def _cell(g: int, d1: int, d2: int, gamma: int, exponent: int) -> LaurentPoly:
    return lefschetz(exponent) * sym_power(g, d2) * sym_power(g, d1 - d2 + 2 * g - 2 + gamma)


@lru_cache(maxsize=None)
def poles_motive(g: int, d: int, gamma: int, regime: Regime | str = Regime.EPS) -> LaurentPoly:
    """Motive in the first chamber (eps) or the unbounded one (infty)."""
    check_genus(g)
    regime = Regime(regime)
    if gamma < 1:
        raise ParameterError(f"pole order must be at least 1, got {gamma}")
    if d < 2 - 2 * g - gamma:
        raise DegreeTooLow(f"moduli space with poles is empty for d={d}, gamma={gamma}")
    top = 4 * g - 4 + 3 * gamma
    if regime is Regime.INFTY:
        if gamma <= d:
            raise PoleOrderTooSmall(f"infinity regime needs gamma > d, got gamma={gamma}, d={d}")
        motive = ZERO
        for p in index_set(g, d, IndexKind.I2_INFTY, gamma):
            motive = motive + _cell(g, p.d1, p.d2, gamma, top)
        return motive
    motive = lefschetz(4 * g - 4 + 4 * gamma) * pair_motive(g, d, 0)
    for p in index_set(g, d, IndexKind.POLES_1, gamma):
        # first family: the roles of d1 and d2 in the symmetric powers swap
        motive = motive + (
            lefschetz(3 * g - 3 + 3 * gamma + p.d2)
            * sym_power(g, p.d1)
            * sym_power(g, p.cosection_degree(g, gamma))
        )
    for p in index_set(g, d, IndexKind.POLES_2, gamma):
        motive = motive + _cell(g, p.d1, p.d2, gamma, top)
    return motive


def _limit_numerator(g: int) -> LaurentPoly:
    t = var("t")
    return (1 + t**3) ** (2 * g) * (1 + t) ** (2 * g)


def _limit_denominator() -> LaurentPoly:
    t = var("t")
    return (1 - t**2) ** 2 * (1 - t**4)


def poles_limit_check(
    g: int,
    degree_bound: int,
    gamma_max: int,
    d: int = 1,
    regimes: tuple[Regime, ...] = (Regime.EPS, Regime.INFTY),
) -> CheckReport:
    """Low-degree Poincare coefficients approach (1+t^3)^2g (1+t)^2g / ((1-t^2)^2 (1-t^4)).

    Multiplying by the denominator, coefficients below degree_bound must match
    the numerator for the two largest gamma tested, in every requested regime
    that is defined there.
    """
    name = f"poles limit g={g} d={d}"
    numerator = _limit_numerator(g)
    denominator = _limit_denominator()
    checked: list[str] = []
    for regime in regimes:
        for gamma in (gamma_max - 1, gamma_max):
            if regime is Regime.INFTY and gamma <= d:
                continue
            p = pvir(poles_motive(g, d, gamma, regime), poles_dimension(g, d, gamma))
            cleared = p * denominator
            for k in range(degree_bound):
                expected = numerator.coefficient(et=k)
                actual = cleared.coefficient(et=k)
                if expected != actual:
                    return failed(name, f"{regime.value} gamma={gamma} t^{k}", expected, actual)
            checked.append(f"{regime.value}:{gamma}")
            logger.debug("poles g=%d d=%d gamma=%d %s stable", g, d, gamma, regime.value)
    return passed(name, degree_bound=degree_bound, checked=checked)

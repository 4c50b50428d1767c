"""Generating functions over the odd degrees and their closed forms.

F^mot and F^vir collect the first-chamber triple motives (and their virtual
Poincare polynomials) at q^(d + 2g - 2), d odd. The closed forms are built
from zeta functions and rational functions in q and t; pure-t denominators
are cleared by the caller before any comparison.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache

from sympy.polys.rings import PolyElement

from .blocks import L, check_genus, jacobian, lefschetz, pvir, sym_power, zeta_series
from .constants import DEFAULT_ORDER_FACTOR
from .errors import (
    ArithmeticAssertion,
    NegativeCoefficient,
    NonIntegral,
    ParameterError,
    RangeMismatch,
    TruncationNotZero,
)
from .pairs import pair_genfun_motivic
from .report import CheckReport, compare_sequences, failed, passed
from .ring import ZERO, LaurentPoly, QSeries, exact_div, parity_filter, raw, series_expand, var
from .triples import higgs_motive_extract, triple_motive_eps

logger = logging.getLogger(__name__)


class Mode(str, Enum):
    DIRECT = "direct"
    CLOSED = "closed"


@dataclass(frozen=True)
class SeriesPair:
    """A direct sum and a closed form, both multiplied by `cleared_factors`."""

    direct: QSeries
    closed: QSeries
    cleared_factors: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.direct.var != self.closed.var or self.direct.order != self.closed.order:
            raise ValueError("series pair members must share variable and order")

    @property
    def agree(self) -> bool:
        return self.direct == self.closed


def default_order(g: int) -> int:
    return DEFAULT_ORDER_FACTOR * g


def _t_power(k: int) -> LaurentPoly:
    return LaurentPoly.from_terms({(0, 0, k, 0): 1})


def _polynomial(p: PolyElement, order: int) -> QSeries:
    return series_expand(p, [], order)


def _check_order(order: int, minimum: int, what: str) -> None:
    if order < minimum:
        raise ParameterError(f"{what} needs order >= {minimum}, got {order}")


def _degree(k: int, g: int) -> int:
    """Degree d of the triple moduli space sitting at q^k."""
    return k - 2 * g + 2


# ============================================================
# F^mot
# ============================================================


def _gamma(g: int, order: int) -> QSeries:
    coeffs = [ZERO] * order
    for j in range(g - 1):
        if 2 * j + 1 < order:
            coeffs[2 * j + 1] = sym_power(g, 2 * j + 1)
    return QSeries.from_coeffs(coeffs, order)


def _theta(g: int, order: int) -> QSeries:
    top = lefschetz(4 * g - 3)
    coeffs = [ZERO] * order
    for n in range(2 * g - 2):
        k = 2 * n + 2 * g - 1
        if k >= order:
            break
        total = ZERO
        for i in range(n + 1):
            s_i = sym_power(g, i)
            total = total + top * s_i * (L - 1) * sym_power(g, 2 * n + 1 - i)
            total = total - s_i * jacobian(g) * (lefschetz(3 * g - 1 + 2 * n - i) - top)
        coeffs[k] = total
    return QSeries.from_coeffs(coeffs, order)


def _zeta_in_q_squared(g: int, order: int, factor: LaurentPoly | int = 1) -> QSeries:
    zeta = zeta_series(g, order // 2 + 1).rescale(factor)
    return zeta.with_var("q").dilate(2).truncate(order)


def _fmot_closed(g: int, order: int) -> QSeries:
    top = lefschetz(4 * g - 3)
    pairs = pair_genfun_motivic(g, order // 2 + 1).with_var("q").dilate(2)
    total = (pairs.shift_q(2 * g - 1) * top).truncate(order)
    z_lq2 = _zeta_in_q_squared(g, order, L)
    for j in range(g - 1):
        weight = sym_power(g, 2 * j + 1) * lefschetz(5 * g - 5 - 2 * j)
        total = total + (z_lq2.shift_q(4 * g - 5 - 2 * j) * weight).truncate(order)
    total = total + _zeta_in_q_squared(g, order) * _gamma(g, order) * top
    return total + _theta(g, order)


@lru_cache(maxsize=None)
def fmot(g: int, order: int, mode: Mode | str = Mode.DIRECT) -> QSeries:
    """F^mot = sum over odd d of [M_eps(d)] q^(d + 2g - 2)."""
    check_genus(g)
    _check_order(order, 1, "F^mot")
    if Mode(mode) is Mode.CLOSED:
        return _fmot_closed(g, order)
    coeffs = [triple_motive_eps(g, _degree(k, g)) if k % 2 else ZERO for k in range(order)]
    return QSeries.from_coeffs(coeffs, order)


# ============================================================
# F^vir
# ============================================================


def _fvir_direct(g: int, order: int) -> QSeries:
    coeffs = [
        pvir(triple_motive_eps(g, _degree(k, g)), k + 4 * g - 3) if k % 2 else ZERO
        for k in range(order)
    ]
    return QSeries.from_coeffs(coeffs, order)


def _bracket(g: int, order: int, sign: int) -> QSeries:
    """f(q) + sign * f(-q), f(q) = (1+qt)^2g / ((1-qt^2)(1-q))."""
    q, t = raw("q"), raw("t")
    first = series_expand((1 + q * t) ** (2 * g), [1 - q * t**2, 1 - q], order)
    second = series_expand((1 - q * t) ** (2 * g), [1 + q * t**2, 1 + q], order)
    return first + second * sign


def _fvir_closed_cleared(g: int, order: int) -> QSeries:
    """2 (1 - t^2) times the closed form of F^vir."""
    q, t = raw("q"), raw("t")
    n = 2 * g
    a = (1 + t) ** n
    prefix = q ** (2 * g - 1)
    cubic = (1 + q**2 * t**3) ** n
    linear = (1 + q**2 * t) ** n
    d1, d2, d4 = 1 - q**2, 1 - q**2 * t**2, 1 - q**2 * t**4

    first = series_expand(prefix * a * cubic, [d1, d2, d4], order)
    second = series_expand(-prefix * t**n * a * linear, [d1, d2, d4], order)
    fourth = series_expand(prefix * linear * a * t**n, [d1, d2, d4], order) - series_expand(
        prefix * linear * a * t ** (4 * g - 4), [d1, d1, d2], order
    )
    sixth = series_expand(prefix * a * cubic * t**n, [d2, d4, d4], order) - series_expand(
        prefix * a * cubic, [d2, d4, d1], order
    )
    bracket = _bracket(g, order, -1)
    third = series_expand(q ** (2 * g - 2) * t ** (4 * g - 4) * linear, [d1, d2], order) * bracket
    fifth = series_expand(cubic, [d2, d4], order) * bracket

    one_minus_t2 = 1 - var("t") ** 2
    halves = (third + fifth) * one_minus_t2
    theta = _theta(g, order).map_coeffs(
        lambda k, c: pvir(c, k + 4 * g - 3) * 2 * one_minus_t2 if c else ZERO
    )
    return (first + second + fourth + sixth) * 2 + halves + theta


@lru_cache(maxsize=None)
def fvir_cleared(g: int, order: int) -> SeriesPair:
    """Direct and closed F^vir, both multiplied by 2(1 - t^2)."""
    check_genus(g)
    _check_order(order, 1, "F^vir")
    factor = (1 - var("t") ** 2) * 2
    return SeriesPair(
        direct=_fvir_direct(g, order) * factor,
        closed=_fvir_closed_cleared(g, order),
        cleared_factors=("2", "1-t^2"),
    )


@lru_cache(maxsize=None)
def fvir(g: int, order: int, mode: Mode | str = Mode.DIRECT) -> QSeries:
    """F^vir = sum over odd d of P^vir(M_eps(d)) q^(d + 2g - 2)."""
    check_genus(g)
    _check_order(order, 1, "F^vir")
    if Mode(mode) is Mode.DIRECT:
        return _fvir_direct(g, order)
    cleared = _fvir_closed_cleared(g, order)
    one_minus_t2 = 1 - var("t") ** 2
    return cleared.map_coeffs(lambda _, c: exact_div(c * Fraction(1, 2), one_minus_t2))


# ============================================================
# Q^vir and Q^mot
# ============================================================


def qvir(g: int, order: int | None = None) -> QSeries:
    """Q^vir = (1 - q^2)(1 - q^2 t^4) F^vir, a polynomial of q-degree <= 8g - 5."""
    order = default_order(g) if order is None else order
    _check_order(order, 8 * g - 2, "Q^vir")
    q, t = raw("q"), raw("t")
    product = fvir(g, order) * _polynomial((1 - q**2) * (1 - q**2 * t**4), order)
    bound = 8 * g - 4
    for k in range(bound, order):
        if product.coeff(k):
            raise TruncationNotZero(f"Q^vir has a nonzero coefficient at q^{k}")
    return product.truncate(bound)


def qmot(g: int, order: int | None = None, mode: Mode | str = Mode.DIRECT) -> QSeries:
    """Q^mot = (1 - q^2)(1 - q^2 L^2) F^mot, a polynomial of q-degree <= 8g - 5."""
    order = default_order(g) if order is None else order
    _check_order(order, 8 * g - 2, "Q^mot")
    q, x, y = raw("q"), raw("x"), raw("y")
    product = fmot(g, order, mode) * _polynomial((1 - q**2) * (1 - q**2 * (x * y) ** 2), order)
    bound = 8 * g - 4
    for k in range(bound, order):
        if product.coeff(k):
            raise TruncationNotZero(f"Q^mot has a nonzero coefficient at q^{k}")
    return product.truncate(bound)


# ============================================================
# Character variety, PH and G
# ============================================================


@lru_cache(maxsize=None)
def char_variety_mixed_hodge(g: int, order: int | None = None) -> QSeries:
    """Mixed Hodge polynomial H(M_B, q, t) of the rank-2 twisted character variety.

    Equal to the perverse Hodge polynomial PH(M^{2,1}, q, t); it vanishes
    above q-degree 8g - 6 and has nonnegative integer coefficients.
    """
    check_genus(g)
    order = default_order(g) if order is None else order
    _check_order(order, 8 * g - 5, "H(M_B)")
    q, t = raw("q"), raw("t")
    n = 2 * g
    lead = (1 + q * t) ** n
    shifted = q ** (2 * g - 2) * t ** (4 * g - 4)
    first = series_expand(lead * (1 + q**2 * t**3) ** n, [1 - q**2 * t**2, 1 - q**2 * t**4], order)
    second = series_expand(
        lead * shifted * (1 + q**2 * t) ** n, [1 - q**2, 1 - q**2 * t**2], order
    )
    correction = _bracket(g, order, 1) * LaurentPoly.from_terms({(0, 0, 4 * g - 4, 0): 1})
    correction = correction * _polynomial(q ** (2 * g - 2) * lead, order) * Fraction(1, 2)
    series = first + second - correction

    bound = 8 * g - 5
    for k, c in enumerate(series.coeffs):
        if k >= bound and c:
            raise TruncationNotZero(f"H(M_B) has a nonzero coefficient at q^{k}")
        if not c.is_integral():
            raise NonIntegral(f"H(M_B) coefficient at q^{k} is not integral: {c}")
        if not c.is_nonnegative():
            raise NegativeCoefficient(f"H(M_B) coefficient at q^{k} is negative: {c}")
    logger.debug("H(M_B) g=%d expanded to order %d", g, order)
    return series


def hodge_poincare(g: int) -> LaurentPoly:
    """PH(1, t), the Poincare polynomial of M^{2,1}."""
    return char_variety_mixed_hodge(g, 8 * g - 5).value_at_one()


@lru_cache(maxsize=None)
def g_series(g: int, order: int | None = None) -> QSeries:
    """G = odd part in q of PH / ((1 - q)(1 - q t^2))."""
    order = default_order(g) if order is None else order
    _check_order(order, 2, "G")
    ph = char_variety_mixed_hodge(g, max(order, 8 * g - 5))
    q, t = raw("q"), raw("t")
    return parity_filter(series_expand(ph, [1 - q, 1 - q * t**2], order), 2, 1)


def v_series(g: int, order: int | None = None) -> QSeries:
    """V = (1 - q^2)(1 - q^2 t^4) G, a polynomial of q-degree <= 8g - 4."""
    order = default_order(g) if order is None else order
    _check_order(order, 8 * g - 3, "V")
    q, t = raw("q"), raw("t")
    return g_series(g, order) * _polynomial((1 - q**2) * (1 - q**2 * t**4), order)


# ============================================================
# Checks
# ============================================================


def _palindrome(name: str, s: QSeries, top: int) -> CheckReport | None:
    """a_{top-k} = t^(top-2k) a_k for every k <= top, else the failing report."""
    for k in range(top + 1):
        mirrored = s.coeff(top - k) if top - k < s.order else ZERO
        expected = s.coeff(k) * _t_power(top - 2 * k) if k < s.order else ZERO
        if mirrored != expected:
            return failed(name, f"palindrome q^{top - k}", expected, mirrored)
    return None


def fmot_check(g: int, order: int | None = None) -> CheckReport:
    order = default_order(g) if order is None else order
    direct = fmot(g, order, Mode.DIRECT)
    closed = fmot(g, order, Mode.CLOSED)
    return compare_sequences(
        f"fmot g={g}", list(closed.coeffs), list(direct.coeffs), label="q-degree", order=order
    )


def fvir_check(g: int, order: int | None = None) -> CheckReport:
    order = default_order(g) if order is None else order
    pair = fvir_cleared(g, order)
    return compare_sequences(
        f"fvir g={g}",
        list(pair.closed.coeffs),
        list(pair.direct.coeffs),
        label="q-degree",
        order=order,
        cleared=list(pair.cleared_factors),
    )


def qvir_check(g: int, order: int | None = None) -> CheckReport:
    """Odd support in [1, 8g-5], Q(1,t) = (1+t^2) PH(1,t) and the (qt)^(8g-4) palindrome."""
    name = f"qvir g={g}"
    try:
        q = qvir(g, order)
    except TruncationNotZero as exc:
        return failed(name, "truncation", f"zero above q^{8 * g - 5}", exc)
    for k, c in enumerate(q.coeffs):
        if k % 2 == 0 and c:
            return failed(name, f"q^{k}", 0, c)
    expected = (1 + var("t") ** 2) * hodge_poincare(g)
    if q.value_at_one() != expected:
        return failed(name, "q=1", expected, q.value_at_one())
    return _palindrome(name, q, 8 * g - 4) or passed(name, degree=q.degree())


def qmot_check(g: int, order: int | None = None) -> CheckReport:
    """Q^mot(1) = (1 + L)[M^{2,1}]."""
    name = f"qmot g={g}"
    higgs, _ = higgs_motive_extract(g)
    value = qmot(g, order).value_at_one()
    expected = (1 + L) * higgs
    if value != expected:
        return failed(name, "q=1", expected, value)
    return passed(name)


def v_check(g: int, order: int | None = None) -> CheckReport:
    name = f"v g={g}"
    v = v_series(g, order)
    for k in range(8 * g - 3, v.order):
        if v.coeff(k):
            return failed(name, f"q^{k}", 0, v.coeff(k))
    expected = (1 + var("t") ** 2) * hodge_poincare(g)
    if v.value_at_one() != expected:
        return failed(name, "q=1", expected, v.value_at_one())
    return _palindrome(name, v, 8 * g - 4) or passed(name)


def hmb_check(g: int, order: int | None = None) -> CheckReport:
    """Integrality, nonnegativity, degree bound and functional equation of PH."""
    name = f"hmb g={g}"
    try:
        ph = char_variety_mixed_hodge(g, order)
    except ArithmeticAssertion as exc:
        return failed(name, type(exc).__name__, "pass", exc)
    if ph.coeff(0) != 1:
        return failed(name, "q^0", 1, ph.coeff(0))
    return _palindrome(name, ph, 8 * g - 6) or passed(name, degree=ph.degree())


def higgs_poincare_check(g: int) -> CheckReport:
    """P^vir of the extracted [M^{2,1}] against PH(1, t)."""
    name = f"higgs poincare g={g}"
    higgs, extract = higgs_motive_extract(g)
    if not extract.passed:
        return extract
    actual = pvir(higgs, 8 * g - 6)
    expected = hodge_poincare(g)
    if actual != expected:
        return failed(name, "P(M^{2,1})", expected, actual)
    return passed(name)


def compare_F_G(g: int, order: int | None = None) -> CheckReport:
    """F^vir and G agree in q-degree <= 2g - 3 and >= 6g - 5 (odd degrees).

    The middle-range difference is attached to the report notes, unasserted.
    """
    order = default_order(g) if order is None else order
    _check_order(order, 8 * g - 4, "F/G comparison")
    name = f"compare F/G g={g}"
    diff = fvir(g, order) - g_series(g, order)
    middle: dict[str, str] = {}
    for k in range(1, order, 2):
        c = diff.coeff(k)
        if k <= 2 * g - 3 or k >= 6 * g - 5:
            if c:
                report = failed(name, f"q^{k}", 0, c)
                report.failure = RangeMismatch
                return report
        else:
            middle[f"q^{k}"] = str(c)
    report = passed(name, middle=middle)
    report.failure = RangeMismatch
    return report

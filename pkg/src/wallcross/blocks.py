"""E-polynomials of the curve-derived building blocks.

Symmetric powers come from the motivic zeta function, the Jacobian and
projective spaces are closed forms, and Sym^2 uses the degree-2 power
structure. Negative indices give the zero polynomial (empty spaces), which
is what makes every flip-locus formula vanish where its space is empty.
"""

from __future__ import annotations

import logging
from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import InvalidGenus, NegativeExponent, NonIntegral, ParameterError
from .report import CheckReport, compare_sequences, failed, passed
from .ring import ONE, ZERO, LaurentPoly, QSeries, exact_div, raw, series_expand, substitute, var

logger = logging.getLogger(__name__)

X = var("x")
Y = var("y")
L = X * Y

# sym_power reads coefficients from zeta series computed in chunks of this size
_ZETA_CHUNK = 16


@dataclass(frozen=True)
class CurveParams:
    """Genus of the base curve; every formula is parameterized by it."""

    g: int

    def __post_init__(self) -> None:
        if self.g < 2:
            raise InvalidGenus(f"genus must be at least 2, got {self.g}")


def check_genus(g: int) -> None:
    CurveParams(g)


@lru_cache(maxsize=None)
def lefschetz(k: int = 1) -> LaurentPoly:
    """The class L^k = (xy)^k."""
    if k < 0:
        raise ValueError(f"negative Lefschetz power {k}")
    return L**k


@lru_cache(maxsize=None)
def zeta_series(g: int, order: int, var: str = "u") -> QSeries:
    """E-realization of the motivic zeta function Z(C, u) of a genus-g curve."""
    check_genus(g)
    if order < 1:
        raise ValueError("zeta series order must be at least 1")
    x, y, u = raw("x"), raw("y"), raw("q")
    logger.debug("expanding zeta series g=%d to order %d", g, order)
    return series_expand((1 - x * u) ** g * (1 - y * u) ** g, [1 - u, 1 - x * y * u], order, var)


@lru_cache(maxsize=None)
def sym_power(g: int, n: int) -> LaurentPoly:
    """E(S^n C); zero for n < 0."""
    if n < 0:
        check_genus(g)
        return ZERO
    order = (n // _ZETA_CHUNK + 1) * _ZETA_CHUNK
    return zeta_series(g, order).coeff(n)


@lru_cache(maxsize=None)
def jacobian(g: int) -> LaurentPoly:
    """E(J(C)) = (1-x)^g (1-y)^g, for the Jacobian of any degree."""
    check_genus(g)
    return (1 - X) ** g * (1 - Y) ** g


@lru_cache(maxsize=None)
def proj_space(n: int) -> LaurentPoly:
    """E(CP^n) = 1 + L + ... + L^n; zero for n < 0."""
    if n < 0:
        return ZERO
    total = ZERO
    for k in range(n + 1):
        total = total + lefschetz(k)
    return total


@lru_cache(maxsize=None)
def grassmann2(n: int) -> LaurentPoly:
    """E(Gr(2, n)) as a Gaussian binomial; zero for n < 2."""
    if n < 2:
        return ZERO
    num = (lefschetz(n) - 1) * (lefschetz(n - 1) - 1)
    den = (lefschetz(2) - 1) * (L - 1)
    return exact_div(num, den)


def sym2(e: LaurentPoly) -> LaurentPoly:
    """E(Sym^2 X) = (E(X)(x,y)^2 + E(X)(x^2,y^2)) / 2."""
    if not e.variables() <= {"x", "y"}:
        raise ValueError(f"sym2 expects an E-polynomial in x and y, got {e}")
    adams = substitute(e, {"x": X * X, "y": Y * Y})
    result = (e * e + adams) * Fraction(1, 2)
    if not result.is_integral():
        raise NonIntegral(f"Sym^2 of {e} has non-integral coefficients")
    return result


def pvir(e: LaurentPoly, dim: int) -> LaurentPoly:
    """Virtual Poincare polynomial t^(2 dim) E(-1/t, -1/t)."""
    if dim < 0:
        raise ParameterError(f"dimension must be nonnegative, got {dim}")
    out: dict[tuple[int, int, int, int], Fraction] = {}
    for (ex, ey, et, ew), c in e.terms():
        if et or ew:
            raise ValueError(f"pvir expects an E-polynomial in x and y, got {e}")
        k = 2 * dim - ex - ey
        if k < 0:
            raise NegativeExponent(f"x^{ex} y^{ey} exceeds dimension {dim}")
        key = (0, 0, k, 0)
        out[key] = out.get(key, Fraction(0)) + (-c if (ex + ey) % 2 else c)
    return LaurentPoly.from_terms(out)


def series_pvir(s: QSeries, dim_of: Callable[[int], int]) -> QSeries:
    """Coefficientwise pvir, with the dimension given per series degree."""
    return s.map_coeffs(lambda n, c: pvir(c, dim_of(n)) if c else ZERO)


def is_monic_top(e: LaurentPoly, dim: int) -> bool:
    """True if the top-degree part of e is exactly (xy)^dim."""
    top = [(ex, ey, c) for (ex, ey, _, _), c in e.terms() if ex + ey >= 2 * dim]
    return top == [(dim, dim, Fraction(1))]


# ============================================================
# Checks
# ============================================================


def macdonald_check(g: int, order: int) -> CheckReport:
    """Sum of P(S^n C) q^n against (1+qt)^(2g) / ((1-q)(1-qt^2))."""
    q, t = raw("q"), raw("t")
    closed = series_expand((1 + q * t) ** (2 * g), [1 - q, 1 - q * t**2], order)
    direct = [pvir(sym_power(g, n), n) for n in range(order)]
    return compare_sequences(
        f"macdonald g={g}", list(closed.coeffs), direct, label="q-degree", order=order
    )


def serre_symmetric_check(g: int, k: int) -> CheckReport:
    """[S^k] = L^(k-g+1) [S^(2g-2-k)] + [CP^(k-g)] [J], mirrored for k < g-1."""
    check_genus(g)
    if not 0 <= k <= 2 * g - 2:
        raise ParameterError(f"k must lie in [0, {2 * g - 2}], got {k}")
    kk = k if k >= g - 1 else 2 * g - 2 - k
    lhs = sym_power(g, kk)
    rhs = lefschetz(kk - g + 1) * sym_power(g, 2 * g - 2 - kk) + proj_space(kk - g) * jacobian(g)
    name = f"serre g={g} k={k}"
    if lhs != rhs:
        return failed(name, f"k={kk}", lhs, rhs)
    return passed(name, evaluated_at=kk)


def sym2_check(g: int, max_n: int = 8) -> CheckReport:
    """Sym^2 oracles: the curve against the zeta function, CP^n against Gr(2, n+2)."""
    name = f"sym2 g={g}"
    curve = sym_power(g, 1)
    if sym2(curve) != sym_power(g, 2):
        return failed(name, "Sym^2 C", sym_power(g, 2), sym2(curve))
    if sym2(ONE) != ONE:
        return failed(name, "Sym^2 pt", ONE, sym2(ONE))
    for n in range(max_n + 1):
        if sym2(proj_space(n)) != grassmann2(n + 2):
            return failed(name, f"Sym^2 CP^{n}", grassmann2(n + 2), sym2(proj_space(n)))
    return passed(name, max_n=max_n)

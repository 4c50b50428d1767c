"""Exact arithmetic substrate: Laurent polynomials and truncated series.

Everything is built on one sympy polynomial ring over QQ in the generators
x, y, t, w and the series variable q. A LaurentPoly never contains q; a
QSeries is a polynomial in q truncated at its order. Negative exponents are
only ever needed in t, so both types carry an integer t-shift next to an
ordinary polynomial whose lowest t-exponent is zero.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Mapping, Sequence
from fractions import Fraction
from functools import cached_property
from typing import Any, Literal, Union

from sympy import Symbol, sstr
from sympy.polys.domains import QQ
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.ring_series import rs_mul, rs_series_inversion, rs_trunc
from sympy.polys.rings import PolyElement
from sympy.polys.rings import ring as poly_ring

from .constants import POLY_VARIABLES
from .errors import BadDenominator, NegativeExponent, NonExactDivision, PolynomialFormatError

R, _x, _y, _t, _w, _q = poly_ring("x,y,t,w,q", QQ)

_T = 2
_Q = 4
_NVARS = len(POLY_VARIABLES)

Exponents = tuple[int, int, int, int]
Scalar = Union[int, Fraction]


def _to_qq(value: Scalar) -> Any:
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    return QQ(value)


def _to_fraction(coeff: Any) -> Fraction:
    return Fraction(int(QQ.numer(coeff)), int(QQ.denom(coeff)))


def _normalize(poly: PolyElement, shift: int) -> tuple[PolyElement, int]:
    """Factor the largest power of t out of poly into the shift."""
    if not poly:
        return R.zero, 0
    low = min(m[_T] for m in poly.itermonoms())
    if low == 0:
        return poly, shift
    moved = {m[:_T] + (m[_T] - low,) + m[_T + 1 :]: c for m, c in poly.iterterms()}
    return R.from_dict(moved), shift + low


def _times_t(poly: PolyElement, k: int) -> PolyElement:
    return poly * _t**k if k else poly


class LaurentPoly:
    """Exact polynomial in x, y, w and Laurent in t, over the rationals.

    Immutable: arithmetic always returns new values.
    """

    __slots__ = ("_poly", "_shift")

    def __init__(self, poly: PolyElement | Scalar = 0, shift: int = 0) -> None:
        if isinstance(poly, PolyElement):
            if poly.ring != R:
                raise TypeError("polynomial belongs to a foreign ring")
            if any(m[_Q] for m in poly.itermonoms()):
                raise ValueError("series variable in a LaurentPoly; use QSeries")
        else:
            poly = R(_to_qq(poly))
        self._poly, self._shift = _normalize(poly, shift)

    @classmethod
    def from_terms(cls, terms: Mapping[Exponents, Scalar]) -> LaurentPoly:
        """Build from {(ex, ey, et, ew): coefficient}; only et may be negative."""
        nonzero = {e: c for e, c in terms.items() if c}
        for e in nonzero:
            if min(e[0], e[1], e[3]) < 0:
                raise NegativeExponent(f"exponents {e} are negative outside t")
        if not nonzero:
            return cls()
        low = min(0, *(e[_T] for e in nonzero))
        data = {
            (e[0], e[1], e[2] - low, e[3], 0): _to_qq(c) for e, c in nonzero.items()
        }
        return cls(R.from_dict(data), low)

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> LaurentPoly:
        names = tuple(data.get("vars", POLY_VARIABLES))
        if names != POLY_VARIABLES:
            raise PolynomialFormatError(f"unsupported variable list {names}")
        terms: dict[Exponents, Scalar] = {}
        try:
            for term in data["terms"]:
                e = tuple(int(v) for v in term["e"])
                if len(e) != _NVARS:
                    raise PolynomialFormatError(f"exponent vector of wrong length: {e}")
                terms[e] = Fraction(int(term["num"]), int(term["den"]))  # type: ignore[index]
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise PolynomialFormatError(f"invalid polynomial term: {exc}") from None
        return cls.from_terms(terms)

    @property
    def poly(self) -> PolyElement:
        return self._poly

    @property
    def shift(self) -> int:
        return self._shift

    @property
    def is_zero(self) -> bool:
        return not self._poly

    def terms(self) -> list[tuple[Exponents, Fraction]]:
        """Terms in canonical (lexicographic on x, y, t, w) order."""
        out = [
            ((m[0], m[1], m[2] + self._shift, m[3]), _to_fraction(c))
            for m, c in self._poly.iterterms()
        ]
        out.sort(key=lambda item: item[0])
        return out

    def coefficient(self, ex: int = 0, ey: int = 0, et: int = 0, ew: int = 0) -> Fraction:
        key = (ex, ey, et - self._shift, ew, 0)
        if key[_T] < 0:
            return Fraction(0)
        return _to_fraction(self._poly.get(key, QQ.zero))

    def degree(self, var: str) -> int | None:
        """Largest exponent of var, or None for the zero polynomial."""
        if self.is_zero:
            return None
        i = POLY_VARIABLES.index(var)
        top = max(m[i] for m in self._poly.itermonoms())
        return top + self._shift if i == _T else top

    def min_degree(self, var: str) -> int | None:
        if self.is_zero:
            return None
        i = POLY_VARIABLES.index(var)
        low = min(m[i] for m in self._poly.itermonoms())
        return low + self._shift if i == _T else low

    def variables(self) -> set[str]:
        used = set()
        for m in self._poly.itermonoms():
            used.update(POLY_VARIABLES[i] for i in range(_NVARS) if m[i])
        if self._shift and not self.is_zero:
            used.add("t")
        return used

    def is_integral(self) -> bool:
        return all(QQ.denom(c) == 1 for c in self._poly.itercoeffs())

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self._poly.itercoeffs())

    def coefficient_sum(self) -> Fraction:
        return sum((_to_fraction(c) for c in self._poly.itercoeffs()), Fraction(0))

    def as_expr(self) -> Any:
        return self._poly.as_expr() * Symbol("t") ** self._shift

    def to_json(self) -> dict[str, Any]:
        return {
            "vars": list(POLY_VARIABLES),
            "terms": [
                {"e": list(e), "num": str(c.numerator), "den": str(c.denominator)}
                for e, c in self.terms()
            ],
        }

    # Arithmetic

    def _aligned(self, other: LaurentPoly) -> tuple[PolyElement, PolyElement, int]:
        s = min(self._shift, other._shift)
        return (
            _times_t(self._poly, self._shift - s),
            _times_t(other._poly, other._shift - s),
            s,
        )

    def __add__(self, other: object) -> LaurentPoly:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        a, b, s = self._aligned(o)
        return LaurentPoly(a + b, s)

    __radd__ = __add__

    def __sub__(self, other: object) -> LaurentPoly:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        a, b, s = self._aligned(o)
        return LaurentPoly(a - b, s)

    def __rsub__(self, other: object) -> LaurentPoly:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: object) -> LaurentPoly:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return LaurentPoly(self._poly * o._poly, self._shift + o._shift)

    __rmul__ = __mul__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(-self._poly, self._shift)

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            raise ValueError("negative powers are not polynomial")
        return LaurentPoly(self._poly**n, self._shift * n)

    def __eq__(self, other: object) -> bool:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self._shift == o._shift and self._poly == o._poly

    def __hash__(self) -> int:
        return hash((self._shift, frozenset(self._poly.items())))

    def __bool__(self) -> bool:
        return not self.is_zero

    def __str__(self) -> str:
        return sstr(self.as_expr(), order="lex")

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"


def _coerce(value: object) -> LaurentPoly | None:
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return LaurentPoly(value)
    return None


ZERO = LaurentPoly(0)
ONE = LaurentPoly(1)


def var(name: str) -> LaurentPoly:
    """The generator `name` of the LaurentPoly variable universe."""
    return LaurentPoly(R.gens[POLY_VARIABLES.index(name)])


# ============================================================
# Truncated series
# ============================================================


SeriesLike = Union["QSeries", LaurentPoly, PolyElement, int]


class QSeries:
    """Power series in one series variable, truncated at `order`.

    Coefficients are LaurentPoly values. The series variable is realized by
    the ring generator q whatever its name (q or u); arithmetic requires
    equal names and yields the smaller of the two orders.
    """

    def __init__(self, poly: PolyElement, order: int, var: str = "q", shift: int = 0) -> None:
        if order < 0:
            raise ValueError("series order must be nonnegative")
        if poly.ring != R:
            raise TypeError("polynomial belongs to a foreign ring")
        self._poly, self._shift = _normalize(rs_trunc(poly, _q, order), shift)
        self.order = order
        self.var = var

    @classmethod
    def from_coeffs(
        cls, coeffs: Sequence[LaurentPoly], order: int | None = None, var: str = "q"
    ) -> QSeries:
        order = len(coeffs) if order is None else order
        present = [(n, c) for n, c in enumerate(coeffs) if c and n < order]
        if not present:
            return cls(R.zero, order, var)
        s = min(c.shift for _, c in present)
        data: dict[tuple[int, ...], Any] = {}
        for n, c in present:
            for m, coeff in _times_t(c.poly, c.shift - s).iterterms():
                data[m[:_Q] + (n,)] = coeff
        return cls(R.from_dict(data), order, var, s)

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> QSeries:
        coeffs = [LaurentPoly.from_json(c) for c in data["coeffs"]]
        return cls.from_coeffs(coeffs, int(data["order"]), str(data["var"]))

    @property
    def poly(self) -> PolyElement:
        return self._poly

    @property
    def shift(self) -> int:
        return self._shift

    @cached_property
    def coeffs(self) -> tuple[LaurentPoly, ...]:
        buckets: list[dict[tuple[int, ...], Any]] = [{} for _ in range(self.order)]
        for m, c in self._poly.iterterms():
            buckets[m[_Q]][m[:_Q] + (0,)] = c
        return tuple(
            LaurentPoly(R.from_dict(b), self._shift) if b else ZERO for b in buckets
        )

    def coeff(self, n: int) -> LaurentPoly:
        if n >= self.order:
            raise ValueError(f"coefficient {n} lies beyond the truncation order {self.order}")
        if n < 0:
            return ZERO
        return self.coeffs[n]

    @property
    def is_zero(self) -> bool:
        return not self._poly

    def degree(self) -> int | None:
        """Largest series degree with a nonzero coefficient."""
        if self.is_zero:
            return None
        return max(m[_Q] for m in self._poly.itermonoms())

    def value_at_one(self) -> LaurentPoly:
        """Sum of all coefficients (the series read as a polynomial at q = 1)."""
        return sum(self.coeffs, ZERO)

    def truncate(self, order: int) -> QSeries:
        if order > self.order:
            raise ValueError(f"cannot extend a series known to order {self.order} to {order}")
        return QSeries(self._poly, order, self.var, self._shift)

    def shift_q(self, k: int) -> QSeries:
        """Multiply by q^k (k ≥ 0)."""
        if k < 0:
            raise ValueError("negative series shifts are not supported")
        return QSeries(self._poly * _q**k, self.order + k, self.var, self._shift)

    def dilate(self, k: int) -> QSeries:
        """Substitute q -> q^k."""
        if k < 1:
            raise ValueError("dilation factor must be positive")
        data = {m[:_Q] + (m[_Q] * k,): c for m, c in self._poly.iterterms()}
        return QSeries(R.from_dict(data), self.order * k, self.var, self._shift)

    def rescale(self, factor: LaurentPoly | int) -> QSeries:
        """Substitute q -> factor * q."""
        factor = LaurentPoly(factor) if isinstance(factor, int) else factor
        power = ONE
        out = []
        for c in self.coeffs:
            out.append(c * power)
            power = power * factor
        return QSeries.from_coeffs(out, self.order, self.var)

    def map_coeffs(self, fn: Callable[[int, LaurentPoly], LaurentPoly]) -> QSeries:
        return QSeries.from_coeffs(
            [fn(n, c) for n, c in enumerate(self.coeffs)], self.order, self.var
        )

    def with_var(self, name: str) -> QSeries:
        return QSeries(self._poly, self.order, name, self._shift)

    def to_json(self) -> dict[str, Any]:
        return {
            "var": self.var,
            "order": self.order,
            "coeffs": [c.to_json() for c in self.coeffs],
        }

    # Arithmetic

    def _check(self, other: QSeries) -> None:
        if other.var != self.var:
            raise ValueError(f"series variables differ: {self.var} vs {other.var}")

    def __add__(self, other: object) -> QSeries:
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other: object) -> QSeries:
        return self._combine(other, -1)

    def __rsub__(self, other: object) -> QSeries:
        return -(self - other)

    def _combine(self, other: object, sign: int) -> QSeries:
        if isinstance(other, QSeries):
            self._check(other)
            order = min(self.order, other.order)
            o_poly, o_shift = other._poly, other._shift
        else:
            o = _coerce(other)
            if o is None:
                return NotImplemented
            order = self.order
            o_poly, o_shift = o.poly, o.shift
        s = min(self._shift, o_shift)
        total = _times_t(self._poly, self._shift - s) + sign * _times_t(o_poly, o_shift - s)
        return QSeries(total, order, self.var, s)

    def __mul__(self, other: object) -> QSeries:
        if isinstance(other, QSeries):
            self._check(other)
            order = min(self.order, other.order)
            prod = rs_mul(self._poly, other._poly, _q, order)
            return QSeries(prod, order, self.var, self._shift + other._shift)
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return QSeries(self._poly * o.poly, self.order, self.var, self._shift + o.shift)

    __rmul__ = __mul__

    def __neg__(self) -> QSeries:
        return QSeries(-self._poly, self.order, self.var, self._shift)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return (
            self.var == other.var
            and self.order == other.order
            and self._shift == other._shift
            and self._poly == other._poly
        )

    def __hash__(self) -> int:
        return hash((self.var, self.order, self._shift, frozenset(self._poly.items())))

    def __str__(self) -> str:
        expr = self._poly.as_expr().subs(Symbol("q"), Symbol(self.var))
        body = sstr(expr * Symbol("t") ** self._shift, order="lex")
        return f"{body} + O({self.var}^{self.order})"

    def __repr__(self) -> str:
        return f"QSeries({self})"


def series_var() -> PolyElement:
    """The series generator q as a raw ring element, for building closed forms."""
    return _q


def raw(name: str) -> PolyElement:
    """A raw ring generator by name (x, y, t, w or q)."""
    return R.gens[(*POLY_VARIABLES, "q").index(name)]


# ============================================================
# Operations
# ============================================================


def poly_arith(a: LaurentPoly, b: LaurentPoly, op: Literal["add", "sub", "mul"]) -> LaurentPoly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def exact_div(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Return c with b*c == a, or raise NonExactDivision."""
    if b.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    try:
        quotient = a.poly.exquo(b.poly)
    except ExactQuotientFailed:
        raise NonExactDivision(f"({a}) is not divisible by ({b})") from None
    return LaurentPoly(quotient, a.shift - b.shift)


def _as_series_poly(value: SeriesLike) -> tuple[PolyElement, int, int | None]:
    """Return (poly, t-shift, known order) for any series-like input."""
    if isinstance(value, QSeries):
        return value.poly, value.shift, value.order
    if isinstance(value, LaurentPoly):
        return value.poly, value.shift, None
    if isinstance(value, PolyElement):
        return value, 0, None
    return R(value), 0, None


def _check_denominator(factor: PolyElement) -> None:
    free = R.from_dict({m: c for m, c in factor.iterterms() if m[_Q] == 0})
    if free != R.one:
        raise BadDenominator(
            f"factor {factor.as_expr()} is not 1 plus terms of positive series degree"
        )


def series_expand(
    numerator: SeriesLike,
    denominators: Iterable[SeriesLike],
    order: int,
    var: str = "q",
) -> QSeries:
    """Expand numerator / prod(denominators) as a series truncated at `order`.

    Every denominator must be 1 plus terms of positive series degree; pure-t
    factors such as (1 - t^2) raise BadDenominator and have to be cleared by
    the caller.
    """
    num, shift, known = _as_series_poly(numerator)
    if known is not None:
        order = min(order, known)
    result = rs_trunc(num, _q, order)
    for factor in denominators:
        poly, f_shift, _ = _as_series_poly(factor)
        if f_shift:
            raise BadDenominator("denominator factor has negative powers of t")
        _check_denominator(poly)
        if poly == R.one:
            continue
        result = rs_mul(result, rs_series_inversion(poly, _q, order), _q, order)
    return QSeries(result, order, var, shift)


def truncate(s: QSeries, order: int) -> QSeries:
    return s.truncate(order)


def parity_filter(s: QSeries, r: int, m: int) -> QSeries:
    """Keep exactly the terms whose series degree is congruent to m mod r."""
    if not 0 <= m < r:
        raise ValueError(f"residue {m} out of range for modulus {r}")
    kept = {e: c for e, c in s.poly.iterterms() if e[_Q] % r == m}
    return QSeries(R.from_dict(kept), s.order, s.var, s.shift)


def substitute(p: LaurentPoly, bindings: Mapping[str, LaurentPoly | Scalar]) -> LaurentPoly:
    """Substitute LaurentPoly values for variables; unbound variables stay put.

    A negative exponent (only possible in t) needs a binding that is a
    single term, so that its inverse is again a LaurentPoly.
    """
    targets = []
    for name in POLY_VARIABLES:
        bound = bindings.get(name)
        targets.append(var(name) if bound is None else _coerce(bound))
    powers: dict[tuple[int, int], LaurentPoly] = {}

    def power(i: int, e: int) -> LaurentPoly:
        if (i, e) not in powers:
            base = targets[i]
            assert base is not None
            if e >= 0:
                powers[(i, e)] = base**e
            else:
                powers[(i, e)] = _invert_monomial(base) ** (-e)
        return powers[(i, e)]

    total = ZERO
    for exps, coeff in p.terms():
        term = LaurentPoly(coeff)
        for i, e in enumerate(exps):
            if e:
                term = term * power(i, e)
        total = total + term
    return total


def _invert_monomial(value: LaurentPoly) -> LaurentPoly:
    terms = value.terms()
    if len(terms) != 1 or any(e for i, e in enumerate(terms[0][0]) if i != _T):
        raise ValueError(f"cannot invert {value}: not a monomial in t")
    (exps, coeff) = terms[0]
    return LaurentPoly.from_terms({(0, 0, -exps[_T], 0): 1 / coeff})

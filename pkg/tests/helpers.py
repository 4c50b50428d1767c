"""Shared test utilities and helpers."""

from __future__ import annotations

from wallcross.ring import LaurentPoly, var

X = var("x")
Y = var("y")
T = var("t")
W = var("w")
L = X * Y


def t_poly(*coeffs: int) -> LaurentPoly:
    """Polynomial in t from ascending coefficients."""
    return LaurentPoly.from_terms({(0, 0, k, 0): c for k, c in enumerate(coeffs)})


def curve(g: int) -> LaurentPoly:
    """E(C) = 1 - g x - g y + xy."""
    return 1 - g * X - g * Y + L


def geometric(n: int) -> LaurentPoly:
    """1 + L + ... + L^n."""
    total = LaurentPoly(0)
    for k in range(n + 1):
        total = total + L**k
    return total

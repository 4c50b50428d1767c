"""Flip loci at a wall and the strata they decompose into.

A wall sigma_bar for degree d is a positive integer with the parity of d.
Walls above d are accepted: their loci are empty, so every class below is
zero there (k = (d - sigma_bar)/2 < 0 makes [S^k] vanish).
"""

from __future__ import annotations

from enum import Enum

from ..blocks import L, check_genus, jacobian, lefschetz, proj_space, sym_power
from ..chambers import Sign
from ..errors import IndexNotInSet, NotAWall
from ..ring import ZERO, LaurentPoly, exact_div
from .indices import require_first_family


class SplitKind(str, Enum):
    """Split pairs in the attracting sets of type 1+ and 2+."""

    ONE_PLUS = "1+"
    TWO_PLUS = "2+"


def _wall_depth(d: int, wall: int) -> int:
    if wall <= 0 or (d - wall) % 2:
        raise NotAWall(f"{wall} is not a critical value for degree {d}")
    return (d - wall) // 2


def flip_W(g: int, d: int, wall: int, sign: Sign | str) -> LaurentPoly:
    """[W^{d,+}] or [W^{d,-}] at a wall."""
    check_genus(g)
    k = _wall_depth(d, wall)
    s_k = sym_power(g, k)
    if not s_k:
        return ZERO
    if Sign(sign) is Sign.PLUS:
        return (
            lefschetz(2 * g) * proj_space(2 * g - 3) * s_k * jacobian(g)
            + lefschetz(3 * g - 2) * s_k * sym_power(g, wall)
        )
    return lefschetz(2 * g) * s_k * jacobian(g) * proj_space((d + wall) // 2 + g - 2)


def flip_B_minus(g: int, d: int, wall: int) -> LaurentPoly:
    """[B^{d,-}] at a wall.

    The factor (L^k - L)/(L - 1) is divided exactly, so it is -1 at k = 0 and
    the two lines cancel there.
    """
    check_genus(g)
    k = _wall_depth(d, wall)
    s_k = sym_power(g, k)
    if not s_k:
        return ZERO
    top = lefschetz(4 * g - 3)
    j = jacobian(g)
    first = top * s_k * ((L - 1) * sym_power(g, (d + wall) // 2) + j)
    geometric = exact_div(lefschetz(k) - L, L - 1)
    second = top * geometric * s_k * ((L - 1) * sym_power(g, wall) + j)
    return first + second


def flip_NSW(g: int, d: int, wall: int, sign: Sign | str) -> LaurentPoly:
    """Non-split part of the flip locus."""
    check_genus(g)
    k = _wall_depth(d, wall)
    s_k = sym_power(g, k)
    if not s_k:
        return ZERO
    if Sign(sign) is Sign.PLUS:
        # zero above 2g-2; at 2g-2 only the trivial bundle contributes, [S^0] = 1
        return lefschetz(2 * g) * s_k * sym_power(g, 2 * g - 2 - wall)
    return lefschetz(2 * g) * s_k * jacobian(g) * proj_space(g - 2 + wall)


def flip_SW(g: int, d: int, wall: int, sign: Sign | str) -> LaurentPoly:
    return flip_W(g, d, wall, sign) - flip_NSW(g, d, wall, sign)


def type1_correction(g: int, d1: int, d2: int) -> LaurentPoly:
    """L^{4g-3}[S^d1]((L-1)[S^d2] - [J](L^{d2+1-g} - 1)), kept polynomial for d2 < g-1."""
    s1 = sym_power(g, d1)
    return lefschetz(4 * g - 3) * (L - 1) * s1 * sym_power(g, d2) - s1 * jacobian(g) * (
        lefschetz(3 * g - 2 + d2) - lefschetz(4 * g - 3)
    )


def attract_type1(g: int, d1: int, d2: int) -> LaurentPoly:
    """[F^{(d1,d2),1+}] for a splitting in the first family."""
    check_genus(g)
    if d1 < 0:
        return ZERO
    require_first_family(g, d1, d2)
    cell = lefschetz(3 * g - 2 + d2) * sym_power(g, d1) * sym_power(g, d1 - d2 + 2 * g - 2)
    return cell + type1_correction(g, d1, d2)


def spf(g: int, d1: int, d2: int, kind: SplitKind | str) -> LaurentPoly:
    """Split pairs in an attracting set: 1+ for d1 < d2 in the first family, 2+ for d1 > d2."""
    check_genus(g)
    if SplitKind(kind) is SplitKind.ONE_PLUS:
        require_first_family(g, d1, d2)
        return (
            lefschetz(3 * g - 1 + d2 - d1)
            * sym_power(g, d1)
            * sym_power(g, d1 - d2 + 2 * g - 2)
        )
    if d1 <= d2:
        raise IndexNotInSet(f"SPF 2+ needs d1 > d2, got ({d1}, {d2})")
    return (
        lefschetz(2 * g)
        * sym_power(g, d2)
        * proj_space(d1 - d2 + g - 2)
        * ((L - 1) * sym_power(g, d2 - d1 + 2 * g - 2) + jacobian(g))
    )

"""Index sets of degree splittings.

Every half-integer bound is compared after doubling, so all membership tests
are exact integer inequalities.
"""

from __future__ import annotations

from collections.abc import Callable
from functools import lru_cache

from ..blocks import check_genus
from ..errors import IndexNotInSet, ParameterError, ParityMismatch
from .types import IndexKind, IndexPair

# (g, d, gamma, d1, d2) -> membership
Predicate = Callable[[int, int, int, int, int], bool]


def _i1_odd(g: int, d: int, gamma: int, d1: int, d2: int) -> bool:
    return d1 >= 0 and 2 * d1 >= d + 3 - 2 * g and 2 * d1 <= d - 1


def _i2_odd(g: int, d: int, gamma: int, d1: int, d2: int) -> bool:
    return 2 * d1 >= d + 3 - 2 * g and d1 <= d and 2 * d1 <= d - 1


def _i1_even(g: int, d: int, gamma: int, d1: int, d2: int) -> bool:
    return d1 >= 0 and 2 * d1 >= d + 2 - 2 * g and 2 * d1 <= d - 2


def _i2_even(g: int, d: int, gamma: int, d1: int, d2: int) -> bool:
    return 2 * d1 >= d + 2 - 2 * g and 2 * d1 <= d and d1 <= d


def _i2_even_offdiag(g: int, d: int, gamma: int, d1: int, d2: int) -> bool:
    return _i2_even(g, d, gamma, d1, d2) and 2 * d1 != d


def _i2_infty(g: int, d: int, gamma: int, d1: int, d2: int) -> bool:
    m = d1 - d2 + 2 * g - 2 + gamma
    return (
        2 * d1 >= d - gamma + 2 - 2 * g
        and d1 <= d
        and d2 >= 0
        and 2 * d2 <= d + gamma + 2 * g - 2
        and 0 <= m <= 2 * g - 2 + gamma + d
    )


def _poles_1(g: int, d: int, gamma: int, d1: int, d2: int) -> bool:
    m = d1 - d2 + 2 * g - 2 + gamma
    return (
        d1 >= 0
        and 2 * d1 >= d - gamma + 2 - 2 * g
        and 2 * d1 < d
        and d2 <= d
        and 2 * d2 <= d + gamma + 2 * g - 2
        and max(0, 2 * g - 2 + gamma - d) <= m < 2 * g - 2 + gamma
    )


def _poles_2(g: int, d: int, gamma: int, d1: int, d2: int) -> bool:
    m = d1 - d2 + 2 * g - 2 + gamma
    return (
        2 * d1 >= d - gamma + 2 - 2 * g
        and 2 * d1 < d + 1
        and d1 < d + 1
        and d2 >= 0
        and 2 * d2 > d - 1
        and 2 * d2 <= d + gamma + 2 * g - 2
        and 0 <= m < 2 * g - 2 + gamma + min(1, d + 1)
    )


_PREDICATES: dict[IndexKind, Predicate] = {
    IndexKind.I1_ODD: _i1_odd,
    IndexKind.I2_ODD: _i2_odd,
    IndexKind.I1_EVEN: _i1_even,
    IndexKind.I2_EVEN: _i2_even,
    IndexKind.I2_EVEN_OFFDIAG: _i2_even_offdiag,
    IndexKind.I2_INFTY: _i2_infty,
    IndexKind.POLES_1: _poles_1,
    IndexKind.POLES_2: _poles_2,
}


def _check_kind(d: int, kind: IndexKind, gamma: int) -> None:
    if kind.parity is not None and d % 2 != kind.parity:
        parity = "odd" if kind.parity else "even"
        raise ParityMismatch(f"index set {kind.value} needs {parity} degree, got d={d}")
    if kind.needs_poles and gamma < 1:
        raise ParameterError(f"index set {kind.value} needs pole order >= 1, got {gamma}")
    if gamma < 0:
        raise ParameterError(f"pole order must be nonnegative, got {gamma}")


@lru_cache(maxsize=None)
def _enumerate(g: int, d: int, kind: IndexKind, gamma: int) -> tuple[IndexPair, ...]:
    member = _PREDICATES[kind]
    # every set lies in (d - gamma)/2 + 1 - g <= d1 <= d
    low = (d - gamma - 2 * g) // 2
    return tuple(
        IndexPair(d1, d - d1, kind)
        for d1 in range(low, d + 2)
        if member(g, d, gamma, d1, d - d1)
    )


def index_set(g: int, d: int, kind: IndexKind | str, gamma: int = 0) -> list[IndexPair]:
    """Enumerate an index set in ascending d1."""
    check_genus(g)
    kind = IndexKind(kind)
    _check_kind(d, kind, gamma)
    return list(_enumerate(g, d, kind, gamma))


def is_member(g: int, d1: int, d2: int, kind: IndexKind | str, gamma: int = 0) -> bool:
    kind = IndexKind(kind)
    d = d1 + d2
    if kind.parity is not None and d % 2 != kind.parity:
        return False
    return _PREDICATES[kind](g, d, gamma, d1, d2)


def first_family(d: int) -> IndexKind:
    return IndexKind.I1_ODD if d % 2 else IndexKind.I1_EVEN


def second_family(d: int) -> IndexKind:
    """Second family as it enters the epsilon-chamber assembly."""
    return IndexKind.I2_ODD if d % 2 else IndexKind.I2_EVEN_OFFDIAG


def require_first_family(g: int, d1: int, d2: int) -> IndexPair:
    kind = first_family(d1 + d2)
    if not is_member(g, d1, d2, kind):
        raise IndexNotInSet(f"({d1}, {d2}) is not in {kind.value}({d1 + d2}) for g={g}")
    return IndexPair(d1, d2, kind)

"""Critical values and stability chambers for rank 2.

Chamber k is the open interval between the k-th and (k+1)-th critical
value (chamber 0 starts at 0); the last index is the unbounded chamber
above every wall.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction

from .errors import CriticalSigma, NotAWall, ParameterError


def critical_values(d: int) -> list[int]:
    """Positive integers <= d with the parity of d, ascending."""
    if d <= 0:
        return []
    return list(range(2 - d % 2, d + 1, 2))


def chamber_count(d: int) -> int:
    return len(critical_values(d)) + 1


def last_chamber(d: int) -> int:
    return chamber_count(d) - 1


def check_wall(d: int, wall: int) -> None:
    if wall not in critical_values(d):
        raise NotAWall(f"{wall} is not a critical value for degree {d}")


def check_chamber(d: int, chamber: int) -> None:
    if not 0 <= chamber < chamber_count(d):
        raise ParameterError(
            f"chamber {chamber} out of range for degree {d} (0..{last_chamber(d)})"
        )


def chamber_of_sigma(d: int, sigma: Fraction | int | str) -> int:
    """Map a stability parameter to its chamber index."""
    value = Fraction(sigma)
    if value <= 0:
        raise ParameterError(f"sigma must be positive, got {value}")
    walls = critical_values(d)
    if value in walls:
        raise CriticalSigma(f"sigma {value} is a critical value for degree {d}")
    return sum(1 for wall in walls if wall < value)


class Sign(str, Enum):
    """Side of a wall: the flip locus removed (plus) or added (minus)."""

    PLUS = "plus"
    MINUS = "minus"

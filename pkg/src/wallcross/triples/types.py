"""Types describing rank-2 moduli spaces and degree splittings."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from ..blocks import check_genus
from ..chambers import last_chamber
from ..errors import ParameterError


class IndexKind(str, Enum):
    """Named index sets of degree splittings (d1, d2), d1 + d2 = d."""

    I1_ODD = "I1o"
    I2_ODD = "I2o"
    I1_EVEN = "I1e"
    I2_EVEN = "I2e"
    # I2e without the diagonal cell (d/2, d/2)
    I2_EVEN_OFFDIAG = "I2e~"
    I2_INFTY = "I2inf"
    POLES_1 = "I1eps"
    POLES_2 = "I2eps"

    @property
    def parity(self) -> int | None:
        """Required parity of d, or None if any degree is allowed."""
        if self in (IndexKind.I1_ODD, IndexKind.I2_ODD):
            return 1
        if self in (IndexKind.I1_EVEN, IndexKind.I2_EVEN, IndexKind.I2_EVEN_OFFDIAG):
            return 0
        return None

    @property
    def needs_poles(self) -> bool:
        return self in (IndexKind.POLES_1, IndexKind.POLES_2)


class Regime(str, Enum):
    """Extreme chambers of the poles variant."""

    EPS = "eps"
    INFTY = "infty"


@dataclass(frozen=True, order=True)
class IndexPair:
    d1: int
    d2: int
    kind: IndexKind

    @property
    def d(self) -> int:
        return self.d1 + self.d2

    @property
    def sigma_bar(self) -> int:
        return self.d1 - self.d2

    def cosection_degree(self, g: int, gamma: int = 0) -> int:
        """Degree d1 - d2 + 2g - 2 + gamma of the line bundle carrying the Higgs field."""
        return self.d1 - self.d2 + 2 * g - 2 + gamma


@dataclass(frozen=True)
class ModuliKey:
    """One rank-2 moduli space: genus, degree, chamber and pole order.

    For gamma = 0 the chamber indexes the wall sequence of d (any index past
    the last wall is the unbounded chamber). For gamma >= 1 only the two
    extreme regimes are modeled.
    """

    g: int
    d: int
    chamber: int = 0
    gamma: int = 0
    regime: Regime = Regime.EPS

    def __post_init__(self) -> None:
        check_genus(self.g)
        if self.chamber < 0:
            raise ParameterError(f"chamber must be nonnegative, got {self.chamber}")
        if self.gamma < 0:
            raise ParameterError(f"pole order must be nonnegative, got {self.gamma}")

    @property
    def dimension(self) -> int:
        if self.gamma == 0:
            return self.d + 6 * self.g - 5
        return self.d + 6 * self.g - 6 + 4 * self.gamma

    @property
    def nonempty(self) -> bool:
        return self.d >= 2 - 2 * self.g - self.gamma

    @property
    def is_last_chamber(self) -> bool:
        return self.chamber >= last_chamber(self.d)

    @property
    def smooth(self) -> bool:
        """Smoothness of the cases where the motive is known to be pure."""
        if self.d < 0:
            return True
        if self.gamma >= 1:
            return self.regime is Regime.EPS
        return self.chamber == 0 and self.d % 2 == 1 and self.d > 4 * self.g - 4

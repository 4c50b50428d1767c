"""Rank-2 triple moduli spaces: motives in every chamber, flip loci and strata."""

from ..chambers import critical_values
from .flips import (
    SplitKind,
    attract_type1,
    flip_B_minus,
    flip_NSW,
    flip_SW,
    flip_W,
    spf,
    type1_correction,
)
from .indices import index_set, is_member
from .motive import (
    higgs_motive_extract,
    smooth_cell,
    structure_check,
    triple_dimension,
    triple_motive_chamber,
    triple_motive_eps,
)
from .poles import poles_dimension, poles_limit_check, poles_motive
from .strata import (
    EvenStrata,
    InftyStrata,
    b_plus_sum,
    b_sum_check,
    even_strata,
    infty_strata,
    moteven_check,
)
from .types import IndexKind, IndexPair, ModuliKey, Regime

__all__ = [
    "EvenStrata",
    "IndexKind",
    "IndexPair",
    "InftyStrata",
    "ModuliKey",
    "Regime",
    "SplitKind",
    "attract_type1",
    "b_plus_sum",
    "b_sum_check",
    "critical_values",
    "even_strata",
    "flip_B_minus",
    "flip_NSW",
    "flip_SW",
    "flip_W",
    "higgs_motive_extract",
    "index_set",
    "infty_strata",
    "is_member",
    "moteven_check",
    "poles_dimension",
    "poles_limit_check",
    "poles_motive",
    "smooth_cell",
    "spf",
    "structure_check",
    "triple_dimension",
    "triple_motive_chamber",
    "triple_motive_eps",
    "type1_correction",
]

"""Rational cobordism groups of singular maps via the Kazarian spectral sequence."""
from .kazarian import (
    build_e1,
    custom,
    e_infinity,
    kazarian_homology_series,
    make_family,
    morin,
    prim,
    sigma1r,
)
from .ranks import TargetProfile, cob_rank, cob_rank_closed, cob_rank_over_target
from .series import DEFAULT_TRUNCATION, TruncatedSeries

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_TRUNCATION",
    "TargetProfile",
    "TruncatedSeries",
    "build_e1",
    "cob_rank",
    "cob_rank_closed",
    "cob_rank_over_target",
    "custom",
    "e_infinity",
    "kazarian_homology_series",
    "make_family",
    "morin",
    "prim",
    "sigma1r",
]

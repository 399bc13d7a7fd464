"""Exact generating functions for Eulerian orientations of quartic planar maps.

The main entry points are :class:`~sixvertex.genfun.GenFunBundle` for the
closed-form series, :mod:`sixvertex.tutte` and :mod:`sixvertex.maps` for the
two independent oracles, and :mod:`sixvertex.modular` for the special values
of gamma.
"""

from .coeffring import GAMMA, OMEGA, QQ, QQ_SQRT5, GammaPoly, OmegaLaurent, QuadExtSqrt5
from .genfun import GenFunBundle, Q_of_t, parse_gamma
from .series import TruncSeries

__version__ = "0.1.0"

__all__ = [
    "GAMMA",
    "OMEGA",
    "QQ",
    "QQ_SQRT5",
    "GammaPoly",
    "GenFunBundle",
    "OmegaLaurent",
    "Q_of_t",
    "QuadExtSqrt5",
    "TruncSeries",
    "parse_gamma",
]

"""Exact computation on the SL(2,C) character variety of the four-punctured sphere.

Core layers:

* :mod:`fricke.exactalg` -- exact rationals and sparse multivariate polynomials
* :mod:`fricke.groebner` -- Buchberger's algorithm, ideal arithmetic, solving
* :mod:`fricke.charvariety` -- the trace cubic, membership, unitarity tests
* :mod:`fricke.braid` -- generator maps, words, orbits, fixed loci
* :mod:`fricke.connection` -- numerical holonomy and the Painleve VI layer
* :mod:`fricke.cli` -- the batch command-line front end
"""

from .charvariety import TracePoint, classify, fricke_cubic, on_variety
from .exactalg import Polynomial, Rational, parse_polynomial, parse_rational
from .braid import BraidWord, SubgroupSpec, apply_word, enumerate_orbit, fixed_ideal, fixed_points_at
from .connection import ResidueTuple, PunctureConfig, exp_map, holonomy, pvi_params
from .groebner import Ideal, MonomialOrder, buchberger, ideal_equal, ideal_member

__version__ = "0.1.0"

__all__ = [
    "BraidWord",
    "Ideal",
    "MonomialOrder",
    "Polynomial",
    "PunctureConfig",
    "Rational",
    "ResidueTuple",
    "SubgroupSpec",
    "TracePoint",
    "apply_word",
    "buchberger",
    "classify",
    "enumerate_orbit",
    "exp_map",
    "fixed_ideal",
    "fixed_points_at",
    "fricke_cubic",
    "holonomy",
    "ideal_equal",
    "ideal_member",
    "on_variety",
    "parse_polynomial",
    "parse_rational",
    "pvi_params",
]

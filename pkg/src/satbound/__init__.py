"""Saturation degrees, symbolic powers, Betti tables and regularity of homogeneous ideals."""

from .field import DEFAULT_PRIME, Field, field_from_spec
from .groebner import BudgetExceeded, GroebnerBasis, groebner_basis, normal_form
from .ideal import Ideal, graded_dim, hilbert_data, ideal_member
from .ideal_ops import (
    colon,
    colon_ideal,
    codimension,
    dimension,
    ideal_power,
    intersect,
    is_smooth,
    sat_degree,
    saturate,
    symbolic_power,
)
from .poly import GREVLEX, LEX, MonomialOrder, Polynomial, Ring
from .resolution import BettiTable, arith_reg, geom_reg, minimal_betti, syzygies

__all__ = [
    "DEFAULT_PRIME",
    "Field",
    "field_from_spec",
    "BudgetExceeded",
    "GroebnerBasis",
    "groebner_basis",
    "normal_form",
    "Ideal",
    "graded_dim",
    "hilbert_data",
    "ideal_member",
    "colon",
    "colon_ideal",
    "codimension",
    "dimension",
    "ideal_power",
    "intersect",
    "is_smooth",
    "sat_degree",
    "saturate",
    "symbolic_power",
    "GREVLEX",
    "LEX",
    "MonomialOrder",
    "Polynomial",
    "Ring",
    "BettiTable",
    "arith_reg",
    "geom_reg",
    "minimal_betti",
    "syzygies",
]

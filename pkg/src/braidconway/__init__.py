"""Conway polynomial of pure 3-braids, two independent ways, plus associator numerics.

The pipeline: comb a braid word into its normal form, expand it through the
Magnus map into the algebra of horizontal chord diagrams, and evaluate the
explicit symbol of the Conway polynomial -- or, independently, close the braid
into a two-bridge knot and compute the Conway polynomial through its continued
fraction.  The mzv module evaluates the symbol on the Drinfeld associator and
compares against alternating sums of multiple zeta values.
"""

from .braids import BraidWord, CombedForm, comb, conj_action, multiply, parse_braid
from .diagrams import DiagramCode, classify, diagram_mul, reduce, reduce_word
from .mzv import (
    associator,
    chi_on_associator,
    conjecture_rhs,
    shuffle_regularize,
    zeta,
    zeta_depth_sum,
)
from .polynomials import EvenPoly, LaurentPoly
from .series import Series, geom_power, magnus3, mu3_positive, nu3
from .symbol import (
    binomial_identity_check,
    chi,
    chi_braid,
    chi_code,
    p_closed,
    p_poly,
    partition_transform,
    q_poly,
    telescoping_check,
)
from .twobridge import (
    alexander_2bridge,
    cf_to_fraction,
    closure_word,
    conway_from_alexander,
    conway_of_braid,
    conway_of_fraction,
    mirror_braid,
    word_to_cf,
)

__version__ = "0.1.0"

__all__ = [
    "BraidWord",
    "CombedForm",
    "DiagramCode",
    "EvenPoly",
    "LaurentPoly",
    "Series",
    "alexander_2bridge",
    "associator",
    "binomial_identity_check",
    "cf_to_fraction",
    "chi",
    "chi_braid",
    "chi_code",
    "chi_on_associator",
    "classify",
    "closure_word",
    "comb",
    "conj_action",
    "conjecture_rhs",
    "conway_from_alexander",
    "conway_of_braid",
    "conway_of_fraction",
    "diagram_mul",
    "geom_power",
    "magnus3",
    "mirror_braid",
    "mu3_positive",
    "multiply",
    "nu3",
    "p_closed",
    "p_poly",
    "parse_braid",
    "partition_transform",
    "q_poly",
    "reduce",
    "reduce_word",
    "shuffle_regularize",
    "telescoping_check",
    "word_to_cf",
    "zeta",
    "zeta_depth_sum",
]

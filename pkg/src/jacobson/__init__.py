"""Exact computation in the Jacobson algebra K<X, Y | XY = 1>.

The algebra is handled as the Leavitt path algebra of the Toeplitz graph
(a loop ``c`` at ``v`` and an edge ``d`` into the sink ``w``), with its
simple modules, Prufer modules ``U^f`` and the series module ``Y``.
"""

from .algebra import A, B, C, D, Element, Monomial, gen, laurent_image, poly_at_c, socle_decompose, to_jacobson
from .arith import GF, QQ, Field, FPoly, LaurentPoly, Poly, PPoly, is_irreducible, laurent_gcd, poly_xgcd
from .division import divide, gf_coordinates, right_divide, rho
from .expr import ParseError, parse, parse_poly
from .ideals import IdealClassification, classify_ideal
from .prufer import MnElement, UfElement, alpha, extend_hom_to_Uf, mn_act, psi, submodule_chain, uf_act
from .series import RationalSeries, series_invert
from .simple import RwElement, VfElement, act_Vf, rw_act, simplicity_probe, solve_poly_c_in_Rw
from .ymodule import YElement, essential_witness, extend_hom_from_J, solve_pc_in_Y, y_act

__version__ = "0.1.0"

__all__ = [
    "A", "B", "C", "D", "Element", "Monomial", "gen", "laurent_image", "poly_at_c", "socle_decompose",
    "to_jacobson", "GF", "QQ", "Field", "FPoly", "LaurentPoly", "Poly", "PPoly", "is_irreducible",
    "laurent_gcd", "poly_xgcd", "divide", "gf_coordinates", "right_divide", "rho", "ParseError", "parse",
    "parse_poly", "IdealClassification", "classify_ideal", "MnElement", "UfElement", "alpha",
    "extend_hom_to_Uf", "mn_act", "psi", "submodule_chain", "uf_act", "RationalSeries", "series_invert",
    "RwElement", "VfElement", "act_Vf", "rw_act", "simplicity_probe", "solve_poly_c_in_Rw", "YElement",
    "essential_witness", "extend_hom_from_J", "solve_pc_in_Y", "y_act",
]

"""
Algebra kernel of the ncmod toolkit
"""

from .algebra import (
    Algebra,
    AlgElem,
    associator,
    check_algebra_hom,
    classify,
    commutator,
    left_regular,
    load_builtin,
    mul,
    right_regular,
    unital_extension,
)
from .amodule import (
    Basis,
    Orientation,
    OrientedVector,
    contract,
    coordinates,
    expand,
    extend_basis,
    in_span,
)
from .biring import GenMatrix, cr_product, dualize, evaluate, identity, mat_sum, rc_product, transpose
from .exact import DMatrix, Permutation, Rational, parity, rank, solve_linear
from .hom import ModuleHom, apply, hom_compose, hom_sum
from .ncpoly import NCPoly, parse_ncpoly
from .tensorcalc import Tensor, TensorPoly, differentiate, jacobian_apply, tensor_apply, tensor_compose, tensor_to_map

__all__ = [
    "Algebra",
    "AlgElem",
    "associator",
    "check_algebra_hom",
    "classify",
    "commutator",
    "left_regular",
    "load_builtin",
    "mul",
    "right_regular",
    "unital_extension",
    "Basis",
    "Orientation",
    "OrientedVector",
    "contract",
    "coordinates",
    "expand",
    "extend_basis",
    "in_span",
    "GenMatrix",
    "cr_product",
    "dualize",
    "evaluate",
    "identity",
    "mat_sum",
    "rc_product",
    "transpose",
    "DMatrix",
    "Permutation",
    "Rational",
    "parity",
    "rank",
    "solve_linear",
    "ModuleHom",
    "apply",
    "hom_compose",
    "hom_sum",
    "NCPoly",
    "parse_ncpoly",
    "Tensor",
    "TensorPoly",
    "differentiate",
    "jacobian_apply",
    "tensor_apply",
    "tensor_compose",
    "tensor_to_map",
]

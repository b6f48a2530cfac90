"""Self-dual cyclic codes of length 2^s over GF(2^m) + u GF(2^m), u^2 = 0."""

from .codes import (
    CodeSpec,
    Family,
    count_all_cyclic,
    count_by_family,
    count_selfdual,
    dual_code,
    enumerate_all_cyclic,
    enumerate_selfdual,
    generators,
)
from .estimators import GrayMap, SelfDualCodeEnumerator
from .gf2m import FieldElement, FieldSpec, field_add, field_inv, field_mul, field_new
from .ring import RingElement, RingVector, cyclic_shift, inner_product, lee_weight, ring_mul
from .solver import (
    BitMatrix,
    SolutionSpace,
    build_G,
    build_M,
    solve_homogeneous,
    solve_recursive,
    space_cardinality,
    truncate,
)
from .ypoly import (
    YPoly,
    from_x_basis,
    mul_mod,
    reciprocal_transform,
    selfdual_defect,
    to_x_basis,
    x_inverse,
)

__version__ = "0.1.0"

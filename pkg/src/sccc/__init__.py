"""Construction and analysis of cyclic convolutional codes via the matrix
ring attached to a skew polynomial ring over a product of finite fields."""

from .codes import (
    ConvCode,
    code_degree,
    codeword_weight,
    encode_message,
    encoder_from_generator,
    forney_indices,
    free_distance,
)
from .construct import (
    DegreeSpec,
    RookInstance,
    RookSolution,
    construct_code,
    construct_general,
    prescribed_degree_matrix,
    prescribed_properties,
    rook_solve,
    rook_sweep,
    shift_to_first_rows,
)
from .errors import ScccError
from .field import FieldElement, FieldSpec, canonical_primitive, field_spec_for_order, root_of_unity
from .matring import (
    DegreeMatrix,
    MMatrix,
    complete_to_unit,
    degree_matrix,
    elementary_unit,
    is_basic_member,
    is_semi_reduced_mat,
    is_unit,
    semi_reduce,
    xi,
    xi_inv,
)
from .polymat import (
    Poly,
    PolyMatrix,
    determinant,
    external_degree,
    is_basic,
    is_minimal,
    minors,
    poly_gcd,
    row_degrees,
)
from .skew import (
    RingContext,
    SkewPoly,
    component,
    default_cycle,
    is_delay_free,
    is_semi_reduced_skew,
    p_inverse,
    p_map,
    support,
)

__all__ = [
    "ConvCode",
    "DegreeMatrix",
    "DegreeSpec",
    "FieldElement",
    "FieldSpec",
    "MMatrix",
    "Poly",
    "PolyMatrix",
    "RingContext",
    "RookInstance",
    "RookSolution",
    "ScccError",
    "SkewPoly",
    "canonical_primitive",
    "code_degree",
    "codeword_weight",
    "complete_to_unit",
    "component",
    "construct_code",
    "construct_general",
    "default_cycle",
    "degree_matrix",
    "determinant",
    "elementary_unit",
    "encode_message",
    "encoder_from_generator",
    "external_degree",
    "field_spec_for_order",
    "forney_indices",
    "free_distance",
    "is_basic",
    "is_basic_member",
    "is_delay_free",
    "is_minimal",
    "is_semi_reduced_mat",
    "is_semi_reduced_skew",
    "is_unit",
    "minors",
    "p_inverse",
    "p_map",
    "poly_gcd",
    "prescribed_degree_matrix",
    "prescribed_properties",
    "rook_solve",
    "rook_sweep",
    "root_of_unity",
    "row_degrees",
    "semi_reduce",
    "shift_to_first_rows",
    "support",
    "xi",
    "xi_inv",
]

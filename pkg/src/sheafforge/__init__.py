"""Exact symbolic computations with presented modules, cones and blow-ups.

Everything runs over the rationals with exact arithmetic.  The public
surface re-exports the main types and operations from the submodules.
"""

from .orders import (
    Lex,
    DegRevLex,
    Block,
    Weighted,
    Elimination,
    LEX,
    DEGREVLEX,
    parse_order,
)
from .poly import CoordinateRing, Polynomial, RingMap, RingMismatch, apply_map
from .groebner import (
    Ideal,
    buchberger,
    normal_form,
    poly_gcd,
    poly_lcm,
    squarefree_part,
)
from .modgb import module_buchberger, module_normal_form, syzygy_generators
from .modules import (
    Presentation,
    PresentationMap,
    ClassifyReport,
    TorsionResult,
    presentation_of_ideal,
    generic_rank,
    fitting_ideal,
    min_generators_at,
    corank_at,
    singular_locus,
    torsion_submodule,
    is_torsion_free,
    minimalize,
    free_resolution,
    hom_dim_le_1,
    tensor_presentation,
    classify_sheaf,
)
from .linspace import (
    LinearSpaceIdeal,
    PrimaryComponentIdeal,
    linear_space_ideal,
    primary_component,
    pc_is_linear,
    reducedness_witness,
    is_normal_hypersurface,
)
from .modification import (
    Chart,
    Modification,
    blowup_origin,
    blowup_coordinate_subspace,
    finite_modification,
    build_modification,
    pullback,
    pullback_ideal,
    torsion_free_pullback,
    torsion_free_pullback_ideal,
    contraction,
    pushforward_ideal,
    canonical_multiplicity,
    verify_injection_chain,
    canonical_injection_divisor,
    transform_map,
)
from .sections import truncated_global_sections
from .finite import (
    FiniteMapData,
    rewrite_in_basis,
    pushforward_finite,
    span_contains,
    spans_equal,
)
from .parser import ParseError, parse_polynomial, parse_ring, parse_input
from .report import Report, verify_paper

__version__ = "0.1.0"

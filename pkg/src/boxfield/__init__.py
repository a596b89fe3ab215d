"""Exact arithmetic for generalized power series over ordered exponent groups."""

from .errors import (
    ArityMismatch,
    BoxFieldError,
    DescriptorMismatch,
    EmptyList,
    GroupMismatch,
    IndeterminateComparison,
    IndeterminateSign,
    NonInvertibleCoefficient,
    NonPositiveInput,
    NotExact,
    NotLexSumGroup,
    NotSimple,
    ParseError,
    UnknownClass,
    UnknownLeading,
    UnsupportedGroup,
    ZeroLeading,
    ZeroOrUnknownLeading,
)
from .groups import (
    ArchEquivalence,
    ClassId,
    GroupDescriptor,
    GroupElement,
    GroupMorphism,
    Ordering,
    Q,
    TRIVIAL,
    Z,
    box_sum,
    box_sum_map,
    compose,
    dominant_slot,
    element,
    flatten_descriptor,
    flatten_element,
    group_add,
    group_archimedean_equiv,
    group_classes,
    group_cmp,
    group_neg,
    group_sign,
    identity_map,
    inclusion_z_to_q,
    is_zero,
    leaf_paths,
    lex,
    permutation_map,
    scalar_mul,
    scale_map,
    zero_element,
)
from .series import (
    CoefficientMap,
    Series,
    Sign,
    SimplePresentation,
    box_map,
    coeff_exact,
    coeff_known_zero,
    compose_coefficients,
    constant,
    embed_constants,
    flatten,
    from_presentation,
    identity_coefficients,
    index_of,
    is_canonical,
    leading,
    make_series,
    monomial,
    one,
    series_abs,
    series_add,
    series_cmp,
    series_inv,
    series_mul,
    series_neg,
    series_pow,
    series_scale,
    series_sign,
    terms_above,
    truncate,
    unflatten,
    validate_simple,
    zero,
)
from .levels import (
    DecompositionReport,
    FieldDescriptor,
    LevelClass,
    SubgroupView,
    arch_subfield,
    box_field,
    class_group,
    decompose,
    degree,
    flatten_chain_check,
    from_chain_view,
    generator_set,
    level_class,
    level_cmp,
    level_equiv,
    level_group,
    lower_group,
    rational_field,
    report_to_json,
    to_chain_view,
    upper_group,
)
from .beta import (
    AxiomReport,
    BallSpec,
    CauchyReport,
    SwingSequence,
    axiom_report_to_json,
    ball_member,
    beta_axioms_check,
    cauchy_report_to_json,
    level_set_equiv,
    level_set_member,
    partial_sum_cauchy_check,
    swing_sequence,
    swing_value,
)
from .oracle import (
    NaivePoly,
    bounded_mn_search,
    group_mn_search,
    naive_add,
    naive_cmp,
    naive_from_series,
    naive_inverse_solve,
    naive_mul,
    naive_to_pairs,
    swing_sweep_member,
)
from .parsing import (
    parse_element,
    parse_field_chain,
    parse_group,
    parse_series,
    render_element,
    render_field_chain,
    render_group,
    render_series,
    series_to_json,
)

"""Exact Specht-ideal computations over dominance filters, with a built-in
verification suite that checks the structural facts two independent ways."""

from .combinatorics import (
    FILTER_KINDS,
    TABLEAU_MODES,
    Partition,
    PartitionFilter,
    SetPartition,
    Tableau,
    add_box,
    conjugate,
    derived_filter,
    dominates,
    enumerate_lower_filters,
    enumerate_upper_filters,
    filter_closure,
    filter_text,
    orbit_type,
    parse_filter_text,
    parse_partition_text,
    partition_text,
    partitions_of,
    permutation_sign,
    set_partition_type,
    set_partitions_of_type,
    tableaux,
    validate_partition,
    validate_set_partition,
)
from .groebner import (
    DEFAULT_PAIR_BUDGET,
    IdealBasis,
    PairBudgetExceeded,
    buchberger,
    division,
    groebner_basis,
    ideal_equal,
    ideal_intersection,
    ideal_membership,
    is_groebner_basis,
    normal_form,
    reduce_groebner_basis,
    s_polynomial,
)
from .polyring import (
    GF,
    MAX_VARS,
    QQ,
    Field,
    Monomial,
    MonomialOrder,
    Poly,
    PolynomialSyntaxError,
    coefficients_in_last_variable,
    leading_term,
    lex_order,
    mono_degree,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
    parse_field,
    parse_order,
    parse_polynomial,
    polynomial_text,
)
from .specht import (
    SpechtGenerator,
    column_stabilizer_sign_check,
    filter_generators,
    initial_monomial,
    restricted_standard_generators,
    shape_generators,
    specht_polynomial,
    standard_span_rank,
)
from .strata import (
    StratumSample,
    UnsupportedFieldError,
    check_vanishing,
    sample_stratum,
    subspace_ideal,
    vanishing_ideal_oracle,
)
from .verify import (
    CHECK_NAMES,
    CheckReport,
    SuiteConfig,
    check_coefficient_descent,
    check_containment,
    check_engine,
    check_finite_field,
    check_lexgb,
    check_reduced,
    check_restricted,
    check_stratum_vanishing,
    check_universal,
    determinism_hash,
    main,
    negative_controls,
    run_suite,
    suite_exit_code,
)

__version__ = "0.1.0"

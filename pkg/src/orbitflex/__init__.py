"""Exact flex profiles and orbit-closure degrees of smooth plane curves.

Computes, in exact rational arithmetic, the flex profile of a smooth
plane curve of degree d >= 3 and the predegree/degree of its orbit
closure under the projective linear group, by three mutually checking
routes: closed-form formulas, a per-blow-up correction summation, and a
symbolic Chow-ring engine that derives the correction integrals from
truncated graded-ring expansions and pushforward tables.
"""

from .chowcalc import (
    CenterSpec,
    GradedClass,
    NonUnitDenominatorError,
    PushforwardTable,
    correction_integral,
    expand_truncated,
    predegree_via_chow,
    pushforward,
    verify_identities,
)
from .exactpoly import (
    BigRat,
    MultiPoly,
    UniPoly,
    factor_integer,
    hessian_determinant,
    linear_substitute,
    resultant,
    squarefree_decompose,
)
from .flexlab import (
    FlexProfile,
    FlexSums,
    GenericityFailureError,
    PlaneCurve,
    PointNotOnCurveError,
    SingularCurveError,
    check_smooth,
    f_sums,
    flex_order_at,
    flex_profile,
)
from .orbitformulas import (
    InconsistentProfileError,
    NonDivisibleError,
    PredegreeReport,
    aut_lcm_bound,
    build_report,
    cyclic_curve_degree,
    fermat_predegree,
    flex_contribution,
    orbit_degree,
    predegree_by_blowup_sum,
    predegree_by_flex_orders,
    predegree_by_power_sums,
    simple_flex_predegree,
    table_rows,
)
from .pgl2 import TupleConfig, pgl2_oracle, pgl2_predegree
from .polyparse import ParseError, parse_form

__version__ = "0.1.0"

"""g2desc: two-cover descent data for genus-2 curves with a rational
Weierstrass point, in exact rational arithmetic.

From a sextic model y^2 = f(x) with root alpha of f and a twist parameter
delta in L = Q[X]/(f), the package builds the twisted desingularized Kummer
surface quadrics, the genus-5 curve Z_delta cut out by the Weierstrass
hyperplane, the twisted duplication map to P^1, the genus-1 quotient over the
etale algebra B = Q[w]/(g), and local-solvability reports at the finite
places.  See the README for the CLI and the JSON schemas.
"""

__version__ = "1.0.0"

from .exact import (
    AlgElem,
    DegreeExceeded,
    DenominatorDivisible,
    FpElem,
    NonInvertibleLead,
    NonzeroRemainder,
    ParentMismatch,
    QuotAlgebra,
    UniPoly,
    alg_is_unit,
    alg_mul,
    discriminant,
    eval_hom,
    poly_div_exact,
    reduce_mod_p,
    resultant_monic,
)
from .kummer import (
    InvariantViolation,
    KummerModel,
    SexticCurve,
    Twist,
    companion_R,
    form_C,
    hankel_T,
    kummer_model,
    quadric_Q,
)
from .descent import (
    CoordTransform,
    FiberSystem,
    Genus1Model,
    Genus5Model,
    Indeterminate,
    NotDegreeSix,
    NotOnCurve,
    NotSquarefree,
    OmegaEqualsAlpha,
    OmegaNotRoot,
    P1Point,
    ProjPoint4,
    WeightedPoint,
    ZeroPoint,
    complete_square,
    dup_map,
    fiber_system,
    genus1_model,
    genus5_model,
    is_on_curve,
    lift_point,
    on_genus1_curve,
    phi_map,
    pullback_x,
    quartic_Y,
)
from .locsolve import (
    BadReduction,
    ElsReport,
    ReducedModel,
    SolvabilityVerdict,
    count_points_fp,
    eliminated_system,
    els_report,
    prime_list,
    solvable_at_p,
)
from .scan import active_kernel, scan_p4
from .cli import (
    CurveRecord,
    FixtureSet,
    FixtureTwist,
    MalformedInput,
    emit_chabauty_pack,
    load_fixture,
    load_fixture_set,
    parse_inputs,
    run_fixtures,
)

__all__ = [name for name in dir() if not name.startswith("_")]

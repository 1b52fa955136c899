"""Exact computation in the non-Archimedean ordered field Q(w) of rational-function germs."""

from .errors import (
    DegreeLimit,
    DivisionByZero,
    IntegerExponentRequired,
    NonArchError,
    NonpositiveStep,
    NotFinite,
    NotMember,
    OrderViolation,
    ParseError,
    TypeMismatch,
    UniverseTooLarge,
    ZeroGerm,
)
from .germ import (
    Germ,
    Ordering,
    add,
    compare,
    div,
    embed_rational,
    epsilon,
    eventual_sign_bound,
    mul,
    neg,
    omega,
    sub,
)
from .magnitude import (
    GalaxyRelation,
    Kind,
    Magnitude,
    ScalingCase,
    Sign,
    archimedean_witness,
    classify,
    in_galaxy,
    in_monad,
    inversion_map,
    scaling_case,
    standard_part,
    witness_certificate,
)
from .evaluate import Result, evaluate, run
from .expr import parse, to_text
from .filterlab import (
    FiniteFilter,
    FiniteIdeal,
    FiniteUniverse,
    enumerate_filters,
    filter_to_ideal,
    ideal_to_filter,
    is_ultrafilter,
    lab_report,
    quotient,
)
from .poly import GermPolynomial
from .worlds import (
    StepSituation,
    WalkableWorld,
    WWRelation,
    step_situation,
    ww_iso,
    ww_member,
    ww_relation,
)

__version__ = "0.1.0"

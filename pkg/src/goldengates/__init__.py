"""Gate compilation with super golden gate sets.

Exact synthesis of quaternion words with minimal T-count, approximate
synthesis of PU(2) targets through constrained sums of squares over
quadratic rings, covering-quality diagnostics, and Ramanujan digraphs
built from finite quotients.
"""

from goldengates.diophantine import (
    CapConstraint,
    FourSquareSolution,
    approx_four_squares,
    cap_enumerate,
    cornacchia,
    four_squares,
    two_squares,
)
from goldengates.gatesets import (
    GateKind,
    GateSet,
    ValidationReport,
    Word,
    catalog,
    derive_golden_set,
    make_word,
    nonexamples,
    validate,
)
from goldengates.quaternions import (
    Order,
    OrderId,
    Quaternion,
    canonicalize,
    get_order,
    parse_quaternion,
    pu2_distance,
    reduced_norm,
    to_su2,
    unit_classes,
)
from goldengates.rings import (
    INT,
    PHI,
    SQRT2,
    PrimeFactorization,
    QuadInt,
    RingId,
    euclidean_gcd,
    factor,
    is_totally_positive,
    parse_quadint,
    sqrt_minus_one_mod,
)
from goldengates.synthesis import (
    NotInGroupError,
    SynthesisError,
    SynthesisResult,
    SynthOptions,
    UnsupportedGateSetError,
    approx_diagonal,
    approx_general,
    evaluate,
    exact_synthesize,
    t_count,
)
from goldengates.covering import (
    CoverReport,
    ball_volume,
    covering_stats,
    enumerate_words,
    hole_probe,
    identity_gap,
    identity_gap_bound,
)
from goldengates.digraph import (
    CayleyDigraph,
    InvalidModulusError,
    ModQSplitting,
    RamanujanReport,
    Spectrum,
    UnsupportedModulusError,
    build_cayley,
    numeric_w_s_r,
    ramanujan_check,
    spectrum,
    split_mod_q,
    w_s_r,
)

__version__ = "0.1.0"

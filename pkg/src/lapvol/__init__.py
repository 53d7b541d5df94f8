"""lapvol: exact convex-polytope volume from the half-space description.

The volume of {x >= 0, Ax <= b} is recovered by symbolically inverting
the Laplace transform of the volume-as-a-function-of-b, which is a
product of reciprocal linear forms.  Two independent routes are
implemented on exact rational arithmetic: iterated residue integration
of the exponential integrand (direct), and a change of variable that
reduces everything to the coefficient of one pure power (transform).
Both return identical Fractions on every valid instance.
"""
from .errors import (
    DegenerateInstance,
    DivergentSlice,
    EmptyAfterCleanup,
    GenericityViolated,
    InstanceFormatError,
    MalformedH,
    NonpositiveB,
    NotAPoleInVar,
    NotCompact,
    NotPointed,
    VolumeEngineError,
)
from .linforms import LinForm, P_VAR, Rat, rat
from .polytope import (
    NormalizedInstance,
    PolytopeInstance,
    check_compact,
    compact_witness,
    find_strict_interior,
    make_instance,
    normalize,
    scale_and_dedupe,
)
from .direct import DirectRun, initial_term, run_direct, volume_direct
from .transform import TransformRun, run_transform, substituted_term, volume_transform
from .oracle import (
    McEstimate,
    box_instance,
    identity_check,
    known_instance,
    m2_closed_form,
    mc_volume,
    paper_example,
    random_instance,
    simplex_instance,
)

__version__ = "0.1.0"

__all__ = [
    "DegenerateInstance",
    "DivergentSlice",
    "EmptyAfterCleanup",
    "GenericityViolated",
    "InstanceFormatError",
    "MalformedH",
    "NonpositiveB",
    "NotAPoleInVar",
    "NotCompact",
    "NotPointed",
    "VolumeEngineError",
    "LinForm",
    "P_VAR",
    "Rat",
    "rat",
    "NormalizedInstance",
    "PolytopeInstance",
    "check_compact",
    "compact_witness",
    "find_strict_interior",
    "make_instance",
    "normalize",
    "scale_and_dedupe",
    "DirectRun",
    "initial_term",
    "run_direct",
    "volume_direct",
    "TransformRun",
    "run_transform",
    "substituted_term",
    "volume_transform",
    "McEstimate",
    "box_instance",
    "identity_check",
    "known_instance",
    "m2_closed_form",
    "mc_volume",
    "paper_example",
    "random_instance",
    "simplex_instance",
    "__version__",
]

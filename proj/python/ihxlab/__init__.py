from ._core import (
    CapacityError,
    PreconditionError,
    StructuralError,
    TypeMismatchError,
    alpha,
    canonicalize,
    decomposition,
    enumerate,
    invariant_dimension,
    quotient_rank,
    reduce,
    set_limits,
    space_dimension,
    verify,
    weyl_dimension,
)

from .perm import (
    GenSet,
    Parity,
    Perm,
    compose,
    conjugate,
    cycle,
    from_cycles,
    identity,
    inverse,
    parity,
    parse_perm,
)

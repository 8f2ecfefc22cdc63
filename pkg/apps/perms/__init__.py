from .models import GenSet, Parity, Perm, compose, conjugate, cycle, from_cycles, identity, inverse, parity, parse_perm
from .services import (
    EnumerationOverflow,
    alt_generators,
    alternating_group,
    contains,
    enumerate_elements,
    group_order,
    orbit,
    sym_generators,
    symmetric_group,
)

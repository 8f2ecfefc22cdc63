from .group import (
    EnumerationOverflow,
    alt_generators,
    alternating_group,
    contains,
    enumerate_elements,
    group_order,
    orbit,
    stabilizer_chain,
    sym_generators,
    symmetric_group,
)

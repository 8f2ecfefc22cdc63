from .rgs import restricted_growth_strings, rgs_count
from .witness import (
    BacktrackEngine,
    Engine,
    EnumerationEngine,
    is_distinguishing,
    preserves_classes,
    preserving_witness,
)

from .classification import DEGENERATE_PAIRS, converse_probe, forward_check
from .targets import REMARK_CASES, in_alternating_wreath, remark_conjugator, remark_target
from .verifier import DIAG_PROBES, Mode, Verifier

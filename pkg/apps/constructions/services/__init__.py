from .blocks import BlockRule, partition_lemma_check, u_block, v_block
from .construct import (
    FROZEN_CERTIFICATES,
    Branch,
    Construction,
    alternating_diagonal_branch,
    claimed_dn,
    construct,
    construct_classes,
    construction_schema,
    full_diagonal_branch,
)

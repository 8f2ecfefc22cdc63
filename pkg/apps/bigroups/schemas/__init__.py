from .case import (
    CASE_IDS,
    CROWN_CASES,
    TWO_LINE_CASES,
    CaseId,
    GraphFamily,
    GraphSpec,
    GroupCase,
    GroupInfo,
    TransitivityReport,
    case_violation,
    valid_cases,
)

import logging
from typing import Optional

from apps.bigroups.schemas import GroupCase
from apps.bigroups.services import case_structure
from apps.coloring.models import Partition
from apps.coloring.services import BacktrackEngine, Engine, restricted_growth_strings
from apps.constructions.services import claimed_dn, construct
from core.base_service import BaseService
from core.exceptions import InternalException, ValidationException
from ..schemas.result import Budget, DnResult, Evidence, ExistsOutcome

# how many colorings pass between wall-clock checks
CLOCK_STRIDE = 256


class DistinguishingSolver(BaseService):
    """Exact distinguishing numbers by exhaustive search over restricted-growth colorings."""

    def __init__(self, engine: Optional[Engine] = None, budget: Optional[Budget] = None):
        self.engine = engine or BacktrackEngine()
        self.budget = budget or Budget()

    def exists_distinguishing(self, case: GroupCase, k: int, budget: Optional[Budget] = None,
                              min_classes: int = 1) -> ExistsOutcome:
        """
        First distinguishing coloring with at most ``k`` classes (and at least
        ``min_classes``) in restricted-growth order over v1..vn, u1..un.
        """
        if k < 1:
            raise ValidationException(detail=f"k must be at least 1, got {k}")
        budget = budget or self.budget
        group = case_structure(case)
        n = case.n
        start = self.clock()
        nodes = 0
        status = "refuted"
        hit: Optional[Partition] = None
        for colors in restricted_growth_strings(2 * n, min(k, 2 * n), min_classes):
            if nodes >= budget.nodes or (nodes % CLOCK_STRIDE == 0 and self.elapsed_ms(start) > budget.ms):
                status = "budget_exhausted"
                break
            nodes += 1
            part = Partition(n=n, colors=colors)
            if not self.engine.witness(group, part).found:
                status, hit = "found", part
                break
        ms = self.elapsed_ms(start)
        self.log_event(
            "exists",
            logging.WARNING if status == "budget_exhausted" else logging.INFO,
            case=case.label, k=k, status=status, nodes=nodes, duration=f"{ms:.2f}ms",
        )
        return ExistsOutcome(
            case=case.case_id,
            line=case.line,
            n=n,
            status=status,
            k=k,
            rgs=hit.rgs() if hit else None,
            certificate=hit.to_schema() if hit else None,
            nodes=nodes,
            ms=ms,
        )

    def distinguishing_number(self, case: GroupCase, budget: Optional[Budget] = None,
                              use_theory: bool = False) -> DnResult:
        budget = budget or self.budget
        if use_theory:
            result = self._confirm_claim(case, budget)
            if result is not None:
                return result
            self.log_event("theory-shortcut-failed", logging.WARNING, case=case.label)

        nodes, ms, refuted = 0, 0.0, 0
        for k in range(1, 2 * case.n + 1):
            outcome = self.exists_distinguishing(case, k, budget, min_classes=k)
            nodes, ms = nodes + outcome.nodes, ms + outcome.ms
            if outcome.status == "found":
                return self._exhaustive(case, k, outcome, nodes, ms)
            if outcome.status == "budget_exhausted":
                return self._fallback(case, refuted + 1, nodes, ms)
            refuted = k
        raise InternalException(detail=f"{case.label}: even the discrete coloring is not distinguishing")

    def _confirm_claim(self, case: GroupCase, budget: Budget) -> Optional[DnResult]:
        claimed = claimed_dn(case)
        below = self.exists_distinguishing(case, claimed - 1, budget) if claimed > 1 else None
        if below is not None and below.status != "refuted":
            return None
        at = self.exists_distinguishing(case, claimed, budget, min_classes=claimed)
        if at.status != "found":
            return None
        nodes = at.nodes + (below.nodes if below else 0)
        ms = at.ms + (below.ms if below else 0.0)
        return self._exhaustive(case, claimed, at, nodes, ms)

    def _exhaustive(self, case: GroupCase, k: int, outcome: ExistsOutcome, nodes: int, ms: float) -> DnResult:
        return DnResult(
            case=case.case_id, line=case.line, n=case.n,
            value=k, lo=k, hi=k,
            evidence=Evidence.EXHAUSTIVE,
            certificate=outcome.certificate,
            rgs=outcome.rgs,
            nodes=nodes, ms=ms,
        )

    def _fallback(self, case: GroupCase, lo: int, nodes: int, ms: float) -> DnResult:
        part = construct(case)
        if self.engine.witness(case_structure(case), part).found:
            raise InternalException(detail=f"{case.label}: construction is not distinguishing")
        self.log_event("budget-fallback", logging.WARNING, case=case.label, lo=lo, hi=part.num_colors)
        return DnResult(
            case=case.case_id, line=case.line, n=case.n,
            value=None, lo=lo, hi=part.num_colors,
            evidence=Evidence.CONSTRUCTION_ONLY,
            certificate=part.to_schema(),
            rgs=part.rgs(),
            nodes=nodes, ms=ms,
        )

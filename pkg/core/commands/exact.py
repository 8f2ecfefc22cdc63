from typing import Optional

import click

from apps.solver.services import DistinguishingSolver
from core.output import emit
from core.utils import handle_errors
from ._options import budget_options, build_budget, build_cases, case_options, format_option

DN_COLUMNS = ["case", "line", "n", "value", "lo", "hi", "evidence", "rgs", "nodes", "ms"]
EXISTS_COLUMNS = ["case", "line", "n", "k", "status", "rgs", "nodes", "ms"]


@click.command("exact")
@case_options()
@click.option("--k", type=int, default=None, help="Only ask whether a distinguishing coloring with at most K colors exists.")
@click.option("--use-theory", is_flag=True, default=False, help="Start the search at the claimed value.")
@budget_options
@format_option("json")
@handle_errors
def exact(case_id: str, line: int, n_values, k: Optional[int], use_theory: bool,
          budget_nodes: Optional[int], budget_ms: Optional[int], fmt: str):
    """Computes distinguishing numbers by exhaustive search."""
    cases = build_cases(case_id, line, n_values)
    solver = DistinguishingSolver(budget=build_budget(budget_nodes, budget_ms))

    if k is not None:
        outcomes = [solver.exists_distinguishing(case, k) for case in cases]
        emit(outcomes, fmt, "exists.txt.j2", EXISTS_COLUMNS)
        exhausted = any(outcome.status == "budget_exhausted" for outcome in outcomes)
    else:
        results = [solver.distinguishing_number(case, use_theory=use_theory) for case in cases]
        emit(results, fmt, "dn_result.txt.j2", DN_COLUMNS)
        exhausted = any(result.value is None for result in results)

    if exhausted:
        click.get_current_context().exit(1)

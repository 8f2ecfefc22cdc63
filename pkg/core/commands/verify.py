import re
from typing import List, Optional

import click

from apps.bigroups.schemas import GroupCase, valid_cases
from apps.perms.models import parse_perm
from apps.verifier.schemas import CSV_COLUMNS, Report
from apps.verifier.services import DIAG_PROBES, REMARK_CASES, Verifier
from config.settings import settings
from core.output import emit
from core.utils import NRange, handle_errors, parse_n_range
from ._options import budget_options, build_budget, format_option


@click.command("verify")
@click.option("--table1", is_flag=True, default=False, help="Check every distinguishing-number formula.")
@click.option("--lemma-partition", type=int, default=None, metavar="N", help="Check the block partition lemma up to N.")
@click.option("--diag-conjugacy", is_flag=True, default=False, help="Check that twisting the diagonal by an inner automorphism is a conjugation.")
@click.option("--remark", is_flag=True, default=False, help="Check the conjugated forms of the second-line groups.")
@click.option("--classification", is_flag=True, default=False, help="Check the hypotheses for every listed group.")
@click.option("--probe", is_flag=True, default=False, help="Run the converse classification search for n=2,3 (slow).")
@click.option("--case", "case_id", default=None, help="Restrict table and remark checks to one case.")
@click.option("--n", "n_values", type=NRange(), default=None, help="N or inclusive range A..B.")
@click.option("--mode", type=click.Choice(["exact", "construction"]), default="exact", show_default=True)
@click.option("--workers", type=int, default=settings.WORKERS, show_default=True, help="Processes for table sweeps.")
@budget_options
@format_option("text")
@handle_errors
def verify(table1: bool, lemma_partition: Optional[int], diag_conjugacy: bool, remark: bool,
           classification: bool, probe: bool, case_id: Optional[str], n_values: Optional[List[int]],
           mode: str, workers: int, budget_nodes: Optional[int], budget_ms: Optional[int], fmt: str):
    """Runs the selected checks and reports pass or fail for each."""
    if not any((table1, lemma_partition, diag_conjugacy, remark, classification, probe)):
        raise click.UsageError("select at least one check")

    verifier = Verifier(budget=build_budget(budget_nodes, budget_ms))
    reports: List[Report] = []
    if table1:
        cases = _selected(case_id, n_values or parse_n_range("3..6"))
        reports.extend(verifier.verify_table(cases, mode=mode, workers=workers))
    if lemma_partition is not None:
        reports.append(verifier.verify_partition_lemma(lemma_partition))
    if diag_conjugacy:
        for n in n_values or [6]:
            for text in DIAG_PROBES:
                if max(map(int, re.findall(r"\d+", text)), default=1) <= n:
                    reports.append(verifier.verify_diag_conjugacy(n, parse_perm(text, n)))
    if remark:
        cases = [
            case for case in _selected(case_id, n_values or parse_n_range("4..6"))
            if case.case_id in REMARK_CASES and case.line == 2
        ]
        reports.extend(verifier.verify_remark(case) for case in cases)
    if classification:
        reports.extend(verifier.verify_classification(max(n_values) if n_values else 6))
    if probe:
        reports.extend(verifier.verify_probe([n for n in (n_values or [2, 3]) if n in (2, 3)]))

    emit(reports, fmt, "report.txt.j2", CSV_COLUMNS)
    if not all(report.passed for report in reports):
        click.get_current_context().exit(1)


def _selected(case_id: Optional[str], n_values: List[int]) -> List[GroupCase]:
    cases = sorted((case for n in n_values for case in valid_cases(n)), key=lambda c: (c.case_id, c.line, c.n))
    if case_id is None:
        return cases
    GroupCase.of(case_id, _first_valid_n(case_id, n_values))
    return [case for case in cases if case.case_id == case_id]


def _first_valid_n(case_id: str, n_values: List[int]) -> int:
    """An n the case accepts, so that an unknown case or an empty selection reports the constraint."""
    for n in n_values:
        if any(case.case_id == case_id for case in valid_cases(n)):
            return n
    return n_values[0]

import click

from apps.coloring.services import is_distinguishing
from apps.constructions.services import construct_classes, construction_schema
from core.output import emit
from core.utils import handle_errors
from ._options import build_cases, case_options, format_option

CONSTRUCTION_COLUMNS = ["case", "line", "n", "branch", "ell", "p", "num_colors", "rgs", "distinguishing"]


@click.command("construct")
@case_options()
@format_option("json")
@handle_errors
def construct(case_id: str, line: int, n_values, fmt: str):
    """Builds the explicit distinguishing coloring and checks it."""
    records = []
    for case in build_cases(case_id, line, n_values):
        construction = construct_classes(case)
        records.append(construction_schema(construction, is_distinguishing(case, construction.partition())))
    emit(records, fmt, "construction.txt.j2", CONSTRUCTION_COLUMNS)
    if not all(record.distinguishing for record in records):
        click.get_current_context().exit(1)

import click

from apps.bigroups.services import group_info as build_group_info
from core.output import emit
from core.utils import handle_errors
from ._options import build_cases, case_options, format_option

GROUP_INFO_COLUMNS = ["case", "line", "n", "graph", "order", "plus_order", "induced_order"]


@click.command("group-info")
@case_options()
@format_option("text")
@handle_errors
def group_info(case_id: str, line: int, n_values, fmt: str):
    """Shows order, transitivity and generators of a catalog group."""
    records = [build_group_info(case) for case in build_cases(case_id, line, n_values)]
    emit(records, fmt, "group_info.txt.j2", GROUP_INFO_COLUMNS)

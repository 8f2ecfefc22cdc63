from typing import List

import click

from apps.bigroups.schemas import GroupCase
from apps.solver.schemas import Budget
from core.output import FORMATS
from core.utils import NRange


def case_options(n_default=None):
    """--case, --line and --n, shared by the per-case commands."""
    def decorator(command):
        command = click.option("--n", "n_values", type=NRange(), required=n_default is None, default=n_default,
                               help="Bipart size N or inclusive range A..B.")(command)
        command = click.option("--line", default=1, show_default=True, type=int,
                               help="Line of the case (2 only for c, e, g, i).")(command)
        command = click.option("--case", "case_id", required=True, help="Case identifier a..i.")(command)
        return command
    return decorator


def budget_options(command):
    command = click.option("--budget-ms", type=int, default=None, help="Wall-time budget per k, in ms.")(command)
    command = click.option("--budget-nodes", type=int, default=None, help="Colorings tested per k.")(command)
    return command


def format_option(default: str):
    return click.option("--format", "fmt", type=click.Choice(FORMATS), default=default, show_default=True,
                        help="Output format.")


def build_cases(case_id: str, line: int, n_values: List[int]) -> List[GroupCase]:
    return [GroupCase.of(case_id, n, line) for n in n_values]


def build_budget(budget_nodes, budget_ms) -> Budget:
    overrides = {"nodes": budget_nodes, "ms": budget_ms}
    return Budget(**{key: value for key, value in overrides.items() if value is not None})

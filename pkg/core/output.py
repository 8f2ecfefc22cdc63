import csv
import sys
from typing import Optional, Sequence

import click
from pydantic import BaseModel

from core.utils import load_template_env

FORMATS = ("text", "json", "csv")


def emit(records: Sequence[BaseModel], fmt: str, template: str, columns: Sequence[str],
         context: Optional[dict] = None) -> None:
    """
    Write records to stdout: newline-delimited JSON, CSV with a header row, or
    text rendered from ``core/templates/text/<template>``.
    """
    if fmt == "json":
        for record in records:
            click.echo(record.model_dump_json(by_alias=True))
    elif fmt == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(columns)
        for record in records:
            values = record.model_dump(mode="json", by_alias=True)
            writer.writerow([_cell(values.get(column)) for column in columns])
    else:
        rendered = load_template_env().get_template(template).render(records=records, **(context or {}))
        click.echo(rendered.rstrip("\n"))


def _cell(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    return "" if value is None else value

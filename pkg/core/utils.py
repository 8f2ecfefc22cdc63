import functools
import importlib
from types import ModuleType
from typing import Callable, List

import click
import pydantic
from jinja2 import Environment, FileSystemLoader

from config.settings import settings
from core.exceptions import BaseDnException, ValidationException


def auto_discover_commands(cli, base_dir: str):
    """
    Automatically discover and register all CLI commands from commands directory.
    """
    commands_path = settings.BASE_DIR / base_dir.replace(".", "/")

    def process_command_module(module: ModuleType):
        # Search for objects from Click (Command or Group)
        for attr_name in dir(module):
            attr = getattr(module, attr_name)
            if isinstance(attr, (click.Command, click.Group)):
                cli.add_command(attr)

    if not commands_path.is_dir():
        return

    for file in sorted(commands_path.glob("*.py")):
        if file.stem.startswith("_"):
            continue
        module = importlib.import_module(f"{base_dir}.{file.stem}")
        process_command_module(module)


def load_template_env() -> Environment:
    template_path = settings.BASE_DIR / "core" / "templates" / "text"
    return Environment(loader=FileSystemLoader(str(template_path)), trim_blocks=True, lstrip_blocks=True)


def parse_n_range(text: str) -> List[int]:
    """``"4"`` or the inclusive range ``"3..6"``."""
    text = text.strip()
    try:
        if ".." in text:
            low, high = (int(part) for part in text.split("..", 1))
        else:
            low = high = int(text)
    except ValueError:
        raise ValidationException(detail=f"invalid n {text!r}; expected N or A..B")
    if low > high:
        raise ValidationException(detail=f"empty n range {text!r}")
    return list(range(low, high + 1))


class NRange(click.ParamType):
    name = "n-range"

    def convert(self, value, param, ctx):
        if isinstance(value, list):
            return value
        try:
            return parse_n_range(str(value))
        except ValidationException as e:
            self.fail(e.detail, param, ctx)


def handle_errors(command: Callable) -> Callable:
    """Turns domain errors into click errors: usage problems exit 2, the rest exit 1."""
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except ValidationException as e:
            raise click.UsageError(e.detail)
        except pydantic.ValidationError as e:
            messages = "; ".join(str(error["msg"]).removeprefix("Value error, ") for error in e.errors())
            raise click.UsageError(messages)
        except BaseDnException as e:
            error = click.ClickException(e.detail)
            error.exit_code = e.exit_code
            raise error

    return wrapper

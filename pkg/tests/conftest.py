import json
from typing import List

import pytest
from click.testing import CliRunner

from apps.solver.services import DistinguishingSolver
from manage import cli


@pytest.fixture(scope="session")
def solver() -> DistinguishingSolver:
    return DistinguishingSolver()


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


@pytest.fixture
def invoke(runner):
    """Run ``dn`` with the given arguments and return the click result."""
    def _invoke(*args: str):
        return runner.invoke(cli, list(args))
    return _invoke


def json_lines(text: str) -> List[dict]:
    return [json.loads(line) for line in text.splitlines() if line.strip()]

from enum import Enum
from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from core.exceptions import ValidationException

CaseId = Literal["a", "b", "c", "d", "e", "f", "g", "h", "i"]

CASE_IDS = ("a", "b", "c", "d", "e", "f", "g", "h", "i")
TWO_LINE_CASES = frozenset({"c", "e", "g", "i"})
CROWN_CASES = frozenset({"d", "e"})


class GraphFamily(str, Enum):
    COMPLETE_BIPARTITE = "complete-bipartite"
    CROWN = "crown"


class GraphSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    family: GraphFamily
    n: int = Field(..., description="Size of each bipart")

    @model_validator(mode="after")
    def _check_connected(self) -> "GraphSpec":
        if self.n < 2:
            raise ValueError(f"graph requires n>=2, got n={self.n}")
        if self.family is GraphFamily.CROWN and self.n < 3:
            raise ValueError(f"crown graph requires n>=3 (n={self.n} is disconnected)")
        return self

    @classmethod
    def of(cls, family: GraphFamily, n: int) -> "GraphSpec":
        return _validated(cls, family=family, n=n)

    def __str__(self) -> str:
        if self.family is GraphFamily.CROWN:
            return f"K_{{{self.n},{self.n}}}-{self.n}K_2"
        return f"K_{{{self.n},{self.n}}}"


def case_violation(case_id: str, line: int, n: int) -> Optional[str]:
    """The first constraint a (case, line, n) triple violates, or None."""
    if case_id not in CASE_IDS:
        return f"unknown case {case_id!r}; expected one of a..i"
    if line not in (1, 2):
        return f"line must be 1 or 2, got {line}"
    if line == 2 and case_id not in TWO_LINE_CASES:
        return f"case {case_id} has a single line"
    if case_id in ("f", "g") and n != 6:
        return f"case {case_id} requires n=6"
    if case_id in ("h", "i") and n != 4:
        return f"case {case_id} requires n=4"
    if case_id in ("b", "d", "e") and n < 3:
        return f"case {case_id} requires n>=3"
    if n < 2:
        return f"case {case_id} requires n>=2"
    return None


class GroupCase(BaseModel):
    model_config = ConfigDict(frozen=True)

    case_id: CaseId
    line: Literal[1, 2] = 1
    n: int

    @model_validator(mode="after")
    def _check_constraints(self) -> "GroupCase":
        problem = case_violation(self.case_id, self.line, self.n)
        if problem:
            raise ValueError(problem)
        return self

    @classmethod
    def of(cls, case_id: str, n: int, line: int = 1) -> "GroupCase":
        problem = case_violation(case_id, line, n)
        if problem:
            raise ValidationException(detail=problem)
        return cls(case_id=case_id, line=line, n=n)

    @property
    def family(self) -> GraphFamily:
        return GraphFamily.CROWN if self.case_id in CROWN_CASES else GraphFamily.COMPLETE_BIPARTITE

    @property
    def label(self) -> str:
        return f"{self.case_id}{self.line}/n={self.n}"


def valid_cases(n: int) -> List[GroupCase]:
    """Every accepted (case, line) at this n, in case/line order."""
    return [
        GroupCase(case_id=case_id, line=line, n=n)
        for case_id in CASE_IDS
        for line in (1, 2)
        if case_violation(case_id, line, n) is None
    ]


class TransitivityReport(BaseModel):
    vertex_transitive: bool
    edge_transitive: bool
    connected: bool

    @property
    def all_true(self) -> bool:
        return self.vertex_transitive and self.edge_transitive and self.connected


class GroupInfo(BaseModel):
    case: str
    line: int
    n: int
    graph: str
    order: int
    plus_order: int
    induced_order: int
    transitivity: TransitivityReport
    generators: List[str]
    plus_generators: List[str]


def _validated(model, **values):
    try:
        return model(**values)
    except ValidationError as exc:
        messages = "; ".join(str(error["msg"]).removeprefix("Value error, ") for error in exc.errors())
        raise ValidationException(detail=messages)

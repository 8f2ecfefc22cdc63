from enum import Enum
from typing import Literal, Optional

from pydantic import BaseModel, Field

from apps.coloring.schemas import PartitionSchema
from config.settings import settings


class Budget(BaseModel):
    nodes: int = Field(default_factory=lambda: settings.BUDGET_NODES, ge=1, description="Colorings tested per k")
    ms: int = Field(default_factory=lambda: settings.BUDGET_MS, ge=1, description="Wall time per k")


class Evidence(str, Enum):
    EXHAUSTIVE = "exhaustive"
    CONSTRUCTION_ONLY = "construction_only"


class ExistsOutcome(BaseModel):
    case: str
    line: int
    n: int
    status: Literal["found", "refuted", "budget_exhausted"]
    k: int
    rgs: Optional[str] = None
    certificate: Optional[PartitionSchema] = None
    nodes: int
    ms: float


class DnResult(BaseModel):
    case: str
    line: int
    n: int
    value: Optional[int] = None
    lo: int
    hi: int
    evidence: Evidence
    certificate: PartitionSchema
    rgs: str
    nodes: int
    ms: float

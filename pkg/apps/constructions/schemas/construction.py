from typing import List, Optional

from pydantic import BaseModel, Field

from apps.coloring.schemas import PartitionSchema


class ConstructionSchema(BaseModel):
    case: str
    line: int
    n: int
    branch: str
    ell: Optional[int] = None
    p: Optional[int] = None
    classes: List[List[str]] = Field(..., description="Classes P1..Pk in construction order")
    partition: PartitionSchema
    rgs: str
    num_colors: int
    distinguishing: bool

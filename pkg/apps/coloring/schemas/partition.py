from typing import List

from pydantic import BaseModel, Field


class PartitionSchema(BaseModel):
    n: int = Field(..., ge=1)
    classes: List[List[str]] = Field(..., description="Classes sorted by smallest member in vertex order")

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

CSV_COLUMNS = ["case", "line", "n", "expected", "computed", "evidence", "pass", "ms"]


class Report(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    subject: str
    case: Optional[str] = None
    line: Optional[int] = None
    n: Optional[int] = None
    expected: Optional[int] = None
    provenance: str = ""
    computed: Optional[int] = None
    evidence: str
    passed: bool = Field(..., alias="pass")
    warning: Optional[str] = None
    details: Dict[str, Any] = Field(default_factory=dict)
    ms: float = 0.0

    def csv_row(self) -> List[Any]:
        values = self.model_dump(by_alias=True)
        return [values[column] for column in CSV_COLUMNS]

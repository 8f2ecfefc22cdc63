from typing import Optional


class BaseDnException(Exception):
    exit_code: int = 1
    detail: str = "Internal error"

    def __init__(self, detail: Optional[str] = None, exit_code: Optional[int] = None):
        if detail is not None:
            self.detail = detail
        if exit_code is not None:
            self.exit_code = exit_code
        super().__init__(self.detail)


class ValidationException(BaseDnException):
    exit_code = 2
    detail = "Validation error"

class DegreeMismatchException(ValidationException):
    detail = "Permutation degrees differ"

class OracleUnavailableException(BaseDnException):
    exit_code = 1
    detail = "Group too large for the enumeration engine"

class InternalException(BaseDnException):
    exit_code = 1
    detail = "Internal construction failed"

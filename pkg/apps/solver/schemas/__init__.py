from .result import Budget, DnResult, Evidence, ExistsOutcome

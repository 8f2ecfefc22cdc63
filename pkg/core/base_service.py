import logging
import time

from config.logging import logger


class BaseService:
    """Shared plumbing for the search and verification services."""

    @staticmethod
    def clock() -> float:
        return time.perf_counter()

    @staticmethod
    def elapsed_ms(start: float) -> float:
        return (time.perf_counter() - start) * 1000

    def log_event(self, event: str, level: int = logging.INFO, **fields) -> None:
        """One ``key=value`` line per event."""
        details = " ".join(f"{key}={value}" for key, value in fields.items())
        logger.log(level, f"{event} {details}".rstrip())

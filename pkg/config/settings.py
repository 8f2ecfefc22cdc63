from pathlib import Path
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

class Settings(BaseSettings):
    # Project root directory
    BASE_DIR: Path = Path(__file__).resolve().parent.parent

    APP_NAME: str = "dn"
    APP_VERSION: str = "0.1.0"
    DEBUG: bool = False

    # Group arithmetic
    ENUMERATION_CAP: int = Field(10**6, description="Largest group order computed by closure enumeration")
    CONTAINS_ENUM_CAP: int = Field(10**4, description="Largest group answering membership by enumeration")
    ORACLE_CAP: int = Field(10**6, description="Largest group the enumeration engine will walk")

    # Solver budgets, per value of k
    BUDGET_NODES: int = Field(10**8, description="Colorings enumerated before giving up")
    BUDGET_MS: int = Field(300_000, description="Wall-clock milliseconds before giving up")

    WORKERS: int = Field(1, description="Processes used by verify sweeps")

    model_config = SettingsConfigDict(env_prefix="DN_", env_file=".env", env_file_encoding="utf-8")

settings = Settings()

"""
prism-equitable - Configuration Management
"""
import os
from pathlib import Path

from pydantic_settings import BaseSettings
from pydantic import Field


PACKAGE_ROOT = Path(__file__).resolve().parent.parent


class Settings(BaseSettings):
    """Application settings loaded from environment variables (PRISM_*)."""

    # ===========================================
    # Search Budgets
    # ===========================================
    budget_nodes: int = Field(default=100_000_000, env="PRISM_BUDGET_NODES")
    exact_max_n: int = Field(default=9, env="PRISM_EXACT_MAX_N")
    enumeration_max_n: int = Field(default=7, env="PRISM_ENUMERATION_MAX_N")
    independence_max_vertices: int = Field(default=24, env="PRISM_INDEPENDENCE_MAX_VERTICES")
    window_width: int = Field(default=7, env="PRISM_WINDOW_WIDTH")

    # ===========================================
    # Campaign Defaults
    # ===========================================
    seed: int = Field(default=0, env="PRISM_SEED")
    samples: int = Field(default=1000, env="PRISM_SAMPLES")
    universe: int = Field(default=6, env="PRISM_UNIVERSE")
    jobs: int = Field(default=0, env="PRISM_JOBS")  # 0: one per CPU
    exhaustive_universe_cap: int = Field(default=6, env="PRISM_EXHAUSTIVE_UNIVERSE_CAP")
    fixtures_per_config: int = Field(default=100, env="PRISM_FIXTURES_PER_CONFIG")
    default_format: str = Field(default="text", env="PRISM_DEFAULT_FORMAT")

    # ===========================================
    # Data Files
    # ===========================================
    configurations_path: Path = Field(
        default=PACKAGE_ROOT / "reductions" / "configurations.txt",
        env="PRISM_CONFIGURATIONS_PATH",
    )

    # ===========================================
    # Application Settings
    # ===========================================
    log_level: str = Field(default="INFO", env="PRISM_LOG_LEVEL")

    class Config:
        env_prefix = "PRISM_"
        env_file = ".env"
        env_file_encoding = "utf-8"

    @property
    def exact_max_vertices(self) -> int:
        return 2 * self.exact_max_n

    @property
    def workers(self) -> int:
        return self.jobs if self.jobs > 0 else os.cpu_count() or 1


# Global settings instance
settings = Settings()


def get_settings() -> Settings:
    """Get the global settings instance."""
    return settings

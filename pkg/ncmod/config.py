"""
Configuration settings for the ncmod toolkit
"""

import logging
from typing import List, Optional, Union

from pydantic import Field, ValidationError, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Toolkit settings loaded from environment variables (prefix NCMOD_)"""

    model_config = SettingsConfigDict(
        env_prefix="NCMOD_", env_file=".env", case_sensitive=False, extra="ignore"
    )

    project_name: str = "ncmod - modules over noncommutative algebras"

    # Verification
    seed: Optional[int] = Field(
        default=None, description="Seed used by verify when --seed is absent"
    )
    default_trials: int = Field(default=100, ge=1, description="Trials per suite")
    workers: int = Field(default=1, description="Threads used to run suite trials")

    # Random generators
    coef_min: int = Field(default=-3, description="Smallest generated numerator")
    coef_max: int = Field(default=3, description="Largest generated numerator")
    denominators: Union[str, List[int]] = Field(
        default=[1, 2], description="Denominators drawn by the generators"
    )
    max_poly_terms: int = Field(default=4, ge=1, description="Terms per random polynomial")
    max_word_length: int = Field(default=4, ge=0, description="Word length per random monomial")

    # Logging
    log_level: str = "WARNING"
    log_file: Optional[str] = None

    @field_validator("workers")
    @classmethod
    def validate_workers(cls, v):
        if v < 1:
            raise ValueError(f"workers must be at least 1, got {v}")
        return v

    @field_validator("coef_max")
    @classmethod
    def validate_coef_range(cls, v, info):
        """Numerator range must be non-empty"""
        low = info.data.get("coef_min", -3)
        if v < low:
            raise ValueError(f"coef_max {v} is below coef_min {low}")
        return v

    @field_validator("denominators", mode="before")
    @classmethod
    def assemble_denominators(cls, v):
        if isinstance(v, str):
            v = [int(part.strip()) for part in v.split(",") if part.strip()]
        if not v or any(int(d) <= 0 for d in v):
            raise ValueError(f"denominators must be positive integers, got {v}")
        return [int(d) for d in v]

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v):
        level = v.upper()
        if not isinstance(logging.getLevelName(level), int):
            raise ValueError(f"Unknown log level: {v}")
        return level


# Environment problems found while loading; the CLI reports them as usage errors
settings_errors: List[str] = []


def load_settings() -> Settings:
    """Settings from the environment, or the defaults when it does not validate"""
    try:
        return Settings()
    except ValidationError as e:
        settings_errors.extend(
            f"NCMOD_{'_'.join(str(part) for part in err['loc']).upper()}: {err['msg']}"
            for err in e.errors()
        )
        return Settings.model_construct()


# Global settings instance
settings = load_settings()

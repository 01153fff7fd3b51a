"""
Settings loaded from the environment and an optional .env file.

Every variable is prefixed QGROUP_; command-line flags override them.
"""
import os
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from algebra.cyclo import check_root
from algebra.errors import InvalidRootError


class Settings(BaseModel):
    model_config = ConfigDict(frozen=True)

    N: int = Field(default=3, description="order of the root of unity q")
    output_format: str = Field(default="json", pattern="^(json|text)$")
    log_level: str = "WARNING"
    two_form: str = Field(default="wz", pattern="^(wz|manin)$")
    seed: int = 20250101
    samples: int = Field(default=50, ge=1)

    @field_validator("N")
    @classmethod
    def _odd_order(cls, value: int) -> int:
        return check_root(value)

    @field_validator("log_level")
    @classmethod
    def _level_name(cls, value: str) -> str:
        value = value.upper()
        if value not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ValueError(f"unknown log level {value!r}")
        return value


ENVIRONMENT = {
    "N": "QGROUP_N",
    "output_format": "QGROUP_FORMAT",
    "log_level": "QGROUP_LOG_LEVEL",
    "two_form": "QGROUP_TWO_FORM",
    "seed": "QGROUP_SEED",
    "samples": "QGROUP_SAMPLES",
}


def load_settings(env_file: Optional[str] = None, **overrides) -> Settings:
    """
    Build the settings from the environment, then apply explicit overrides.

    Args:
        env_file: Path of a .env file (default: search upwards from the working directory)
        overrides: Field values that take precedence, None values are ignored

    Returns:
        A frozen Settings instance

    Raises:
        InvalidRootError: for an invalid QGROUP_N or --N
    """
    load_dotenv(env_file)
    values = {field: os.environ[name] for field, name in ENVIRONMENT.items() if os.environ.get(name)}
    values.update({key: value for key, value in overrides.items() if value is not None})
    try:
        return Settings(**values)
    except ValidationError as error:
        if any(item["loc"] == ("N",) for item in error.errors()):
            raise InvalidRootError(values.get("N")) from error
        raise

from pathlib import Path

from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_file='.env',
        env_file_encoding='utf-8',
        env_prefix='BLOCKSET_',
        extra='ignore',
    )

    DEBUG: bool = False
    LOG_LEVEL: str = 'WARNING'

    BITMAP_CAP: int = 2**26
    COVER_NODE_BUDGET: int = 10**7

    BENCH_JOBS: int = 1
    BENCH_DENSITY: float = 0.5

    @field_validator('BITMAP_CAP', 'COVER_NODE_BUDGET', 'BENCH_JOBS')
    @classmethod
    def validate_positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError('Must be a positive integer')
        return value

    @field_validator('BENCH_DENSITY')
    @classmethod
    def validate_density(cls, value: float) -> float:
        if not 0 < value < 1:
            raise ValueError('Density must lie strictly between 0 and 1')
        return value


settings = Settings()

# Templates
TEMPLATES_DIR = Path(__file__).resolve().parent.parent / 'infrastructure' / 'rendering' / 'templates'

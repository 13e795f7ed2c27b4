"""
Configurações do motor, lidas do ambiente (.env opcional)
"""

import os
from functools import lru_cache
from typing import Literal

from dotenv import load_dotenv
from pydantic import BaseModel, Field, ValidationError

from config.logging_config import get_logger
from models.errors import ConfigurationError

logger = get_logger("config.settings")

PolicyName = Literal["leftmost_innermost", "leftmost_outermost", "random"]


class EngineSettings(BaseModel):
    """Limites e padrões do motor de reescrita"""

    step_limit_factor: int = Field(default=10, ge=1, description="step_limit = fator × size²")
    default_policy: PolicyName = Field(default="leftmost_innermost")
    lambda_fuel: int = Field(default=10_000, ge=1, description="Combustível padrão da redução λ")
    fuzz_seed: int = Field(default=20240101, description="Semente base das suítes de propriedades")
    rw_search_limit: int = Field(
        default=20_000, ge=1, description="Máximo de termos visitados ao buscar formas normais comuns"
    )

    def step_limit(self, size: int) -> int:
        return self.step_limit_factor * size * size


@lru_cache(maxsize=1)
def get_settings() -> EngineSettings:
    """Carrega as configurações uma única vez"""
    load_dotenv()

    raw = {
        "step_limit_factor": os.getenv("PATHS_STEP_LIMIT_FACTOR", 10),
        "default_policy": os.getenv("PATHS_DEFAULT_POLICY", "leftmost_innermost"),
        "lambda_fuel": os.getenv("PATHS_LAMBDA_FUEL", 10_000),
        "fuzz_seed": os.getenv("PATHS_FUZZ_SEED", 20240101),
        "rw_search_limit": os.getenv("PATHS_RW_SEARCH_LIMIT", 20_000),
    }

    try:
        settings = EngineSettings(**raw)
    except ValidationError as e:
        logger.error(f"❌ Configuração inválida: {e}")
        raise ConfigurationError(f"configuração inválida: {e.errors()[0]['msg']}") from e

    logger.debug(f"⚙️ Configurações carregadas: {settings.model_dump()}")
    return settings

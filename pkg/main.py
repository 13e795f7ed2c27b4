"""
Motor de reescrita de caminhos computacionais
Ponto de entrada da CLI: python main.py <comando> [opções]
"""

import sys

from cli.commands import run
from config.logging_config import get_logger

logger = get_logger("main")


if __name__ == "__main__":
    logger.debug(f"🚀 Iniciando CLI com argumentos: {sys.argv[1:]}")
    sys.exit(run())

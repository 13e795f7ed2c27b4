"""
Configuração centralizada de logging para o motor de reescrita de caminhos
"""

import logging
import logging.handlers
import os
import sys
from datetime import datetime
from pathlib import Path
from pythonjsonlogger import jsonlogger

ROOT_LOGGER_NAME = "path_engine"

# Configurações
LOG_DIR = os.getenv("LOG_DIR", "logs")
LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")
LOG_MAX_BYTES = int(os.getenv("LOG_MAX_BYTES", 10485760))  # 10MB
LOG_BACKUP_COUNT = int(os.getenv("LOG_BACKUP_COUNT", 5))
LOG_CONSOLE = os.getenv("LOG_CONSOLE", "0") == "1"


class CustomJsonFormatter(jsonlogger.JsonFormatter):
    """Formatador JSON customizado com campos adicionais"""

    def add_fields(self, log_record, record, message_dict):
        super(CustomJsonFormatter, self).add_fields(log_record, record, message_dict)
        log_record['timestamp'] = datetime.utcnow().isoformat()
        log_record['level'] = record.levelname
        log_record['logger'] = record.name
        log_record['module'] = record.module
        log_record['function'] = record.funcName
        log_record['line'] = record.lineno


class RewritingLogFilter(logging.Filter):
    """Filtro para logs do motor de reescrita"""

    def filter(self, record):
        return 'rewriting' in record.name.lower() or 'surfaces' in record.name.lower()


def _rotating(path: str, level: int, formatter: logging.Formatter) -> logging.Handler:
    handler = logging.handlers.RotatingFileHandler(
        path,
        maxBytes=LOG_MAX_BYTES,
        backupCount=LOG_BACKUP_COUNT,
        encoding='utf-8',
        delay=True
    )
    handler.setLevel(level)
    handler.setFormatter(formatter)
    return handler


def setup_logging(name: str = ROOT_LOGGER_NAME, log_dir: str = None) -> logging.Logger:
    """
    Configura o sistema de logging com múltiplos handlers

    Args:
        name: Nome do logger raiz
        log_dir: Diretório dos arquivos de log (padrão: LOG_DIR)

    Returns:
        Logger configurado
    """
    logger = logging.getLogger(name)
    logger.setLevel(getattr(logging, LOG_LEVEL.upper(), logging.INFO))
    logger.propagate = False

    # Evitar duplicação de handlers
    if logger.handlers:
        return logger

    directory = log_dir or LOG_DIR
    Path(directory).mkdir(parents=True, exist_ok=True)

    file_format = logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - [%(filename)s:%(lineno)d] - %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    )

    # 1️⃣ Console Handler (opcional, sempre em stderr para não sujar a saída da CLI)
    if LOG_CONSOLE:
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setLevel(logging.INFO)
        console_handler.setFormatter(logging.Formatter(
            '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
            datefmt='%Y-%m-%d %H:%M:%S'
        ))
        logger.addHandler(console_handler)

    # 2️⃣ File Handler - Arquivo geral (texto)
    logger.addHandler(_rotating(os.path.join(directory, 'application.log'), logging.DEBUG, file_format))

    # 3️⃣ JSON Handler - Logs em JSON para análise
    logger.addHandler(_rotating(
        os.path.join(directory, 'application.json.log'),
        logging.DEBUG,
        CustomJsonFormatter('%(timestamp)s %(level)s %(name)s %(message)s')
    ))

    # 4️⃣ Error Handler - Apenas erros
    logger.addHandler(_rotating(os.path.join(directory, 'errors.log'), logging.ERROR, file_format))

    # 5️⃣ Rewriting Handler - Passos de reescrita e normalização de palavras
    rewriting_handler = _rotating(os.path.join(directory, 'rewriting.log'), logging.DEBUG, file_format)
    rewriting_handler.addFilter(RewritingLogFilter())
    logger.addHandler(rewriting_handler)

    return logger


def get_logger(name: str) -> logging.Logger:
    """
    Obtém um logger específico

    Args:
        name: Nome do módulo/componente

    Returns:
        Logger filho do logger raiz
    """
    return logging.getLogger(f"{ROOT_LOGGER_NAME}.{name}")


# Configurar logging na importação
setup_logging()

"""
Hierarquia de exceções do motor de reescrita de caminhos computacionais

Toda exceção carrega `exit_status`: 1 para erros de domínio, 2 para erros de uso/sintaxe.
A CLI é o único lugar que converte exceções em códigos de saída.
"""

from typing import Optional

DOMAIN_ERROR = 1
USAGE_ERROR = 2


class PathEngineError(Exception):
    """Erro base do motor"""

    exit_status = DOMAIN_ERROR

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


# Erros de domínio (exit 1)

class EndpointMismatch(PathEngineError):
    """Composição de caminhos cujos extremos não encaixam"""


class IllFormed(PathEngineError):
    """Termo cujos extremos internos são inconsistentes"""


class NotARedex(PathEngineError):
    """Redução REWR aplicada a um termo que não é redex"""


class NoCommonShape(PathEngineError):
    """Dois termos diferem em mais de uma posição maximal"""


class StepLimitExceeded(PathEngineError):
    """Normalização excedeu o limite de passos"""


class InvalidSite(PathEngineError):
    """Posição de redex inválida no termo λ"""


class FuelExhausted(PathEngineError):
    """Redução λ não terminou dentro do combustível"""


class ForeignGenerator(PathEngineError):
    """Letra de palavra que não pertence à apresentação"""


class NonCanonicalResidue(PathEngineError):
    """Forma normal que não corresponde a nenhuma forma canônica"""


class WrongSurface(PathEngineError):
    """Elemento canônico de outra superfície"""


class SurfaceMismatch(PathEngineError):
    """Operação de grupo entre elementos de superfícies diferentes"""


class ReplayMismatch(PathEngineError):
    """Passo de trilha que não se reproduz ao ser reaplicado"""


# Erros de uso (exit 2)

class TermSyntaxError(PathEngineError):
    """Texto fora da gramática, com a posição do erro"""

    exit_status = USAGE_ERROR

    def __init__(self, message: str, position: Optional[int] = None):
        if position is not None:
            message = f"{message} (posição {position})"
        super().__init__(message)
        self.position = position


class UnknownSurface(PathEngineError):
    exit_status = USAGE_ERROR


class UnknownRule(PathEngineError):
    exit_status = USAGE_ERROR


class ConfigurationError(PathEngineError):
    exit_status = USAGE_ERROR

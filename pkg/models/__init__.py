from .schemas import (
    AxiomCheck,
    CanonicalElement,
    CircleZ,
    GroupAxiomReport,
    LambdaPathResult,
    ProjZ2,
    SurfacePresentation,
    TorusZZ,
    TraceDocument,
    TraceStep,
)

__all__ = [
    'AxiomCheck',
    'CanonicalElement',
    'CircleZ',
    'GroupAxiomReport',
    'LambdaPathResult',
    'ProjZ2',
    'SurfacePresentation',
    'TorusZZ',
    'TraceDocument',
    'TraceStep',
]

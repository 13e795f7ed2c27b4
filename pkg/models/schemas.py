from pydantic import BaseModel, ConfigDict, Field
from typing import Any, List, Literal, Union


class TraceStep(BaseModel):
    index: int = Field(..., ge=1, description="Ordem do passo (a partir de 1)")
    rule: str = Field(..., description="Rótulo da regra aplicada")
    position: List[int] = Field(default_factory=list, description="Índices dos filhos a partir da raiz")
    before: str
    after: str


class TraceDocument(BaseModel):
    start: str
    normal_form: str
    steps: List[TraceStep] = Field(default_factory=list)


class CircleZ(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["circle"] = "circle"
    n: int = Field(..., description="Número de voltas (loop^n)")


class TorusZZ(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["torus"] = "torus"
    n: int = Field(..., description="Expoente de β")
    m: int = Field(..., description="Expoente de α")


class ProjZ2(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["proj_plane"] = "proj_plane"
    parity: Literal[0, 1]


CanonicalElement = Union[CircleZ, TorusZZ, ProjZ2]


class SurfacePresentation(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    name: Literal["circle", "cylinder", "moebius", "torus", "proj_plane"]
    basepoint: Any = Field(..., description="Endpoint do ponto base")
    generators: tuple = Field(..., description="Folhas Axiom dos geradores")
    relation_rules: tuple = Field(default=(), description="Regras de extensão (co / cicl)")


class AxiomCheck(BaseModel):
    axiom: str
    passed: bool
    checked: int = 0
    counterexamples: List[str] = Field(default_factory=list)


class GroupAxiomReport(BaseModel):
    surface: str
    sample_size: int
    seed: int
    checks: List[AxiomCheck] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)


class LambdaPathResult(BaseModel):
    normal_form: str
    path: str
    steps: int = Field(..., ge=0)

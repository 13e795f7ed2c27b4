"""
Redução β/η e extração do caminho computacional de uma sequência de redução
"""

from dataclasses import dataclass
from typing import List, Literal, Sequence, Tuple

from config.logging_config import get_logger
from config.settings import get_settings
from lambdas.terms import (
    Abs,
    App,
    LambdaTerm,
    Position,
    Var,
    children,
    free_vars,
    replace_at,
    subterm_at,
    substitute,
)
from models.errors import FuelExhausted, InvalidSite, TermSyntaxError
from paths.terms import LambdaEndpoint, PathTerm, Rho, Tau, lambda_step

logger = get_logger("lambdas.reduction")

RedexKind = Literal["beta", "eta"]
Strategy = Literal["leftmost_outermost", "leftmost_innermost"]


@dataclass(frozen=True)
class RedexSite:
    position: Position
    kind: RedexKind

    def __str__(self):
        return ".".join(str(i) for i in self.position) + f":{self.kind}"


def is_beta_redex(t: LambdaTerm) -> bool:
    return isinstance(t, App) and isinstance(t.fun, Abs)


def is_eta_redex(t: LambdaTerm) -> bool:
    """λx.M x com x ∉ FV(M)"""
    return (
        isinstance(t, Abs)
        and isinstance(t.body, App)
        and isinstance(t.body.arg, Var)
        and t.body.arg.name == t.binder
        and t.binder not in free_vars(t.body.fun)
    )


def find_redexes(t: LambdaTerm) -> List[RedexSite]:
    """Todos os redexes β e η, em ordem mais externa à esquerda"""
    found: List[RedexSite] = []

    def walk(term: LambdaTerm, position: Position):
        if is_beta_redex(term):
            found.append(RedexSite(position, "beta"))
        elif is_eta_redex(term):
            found.append(RedexSite(position, "eta"))
        for index, kid in enumerate(children(term)):
            walk(kid, position + (index,))

    walk(t, ())
    return found


def contract(t: LambdaTerm, site: RedexSite) -> Tuple[LambdaTerm, PathTerm]:
    """
    Contrai o redex em `site`

    Returns:
        (termo resultante, folha de passo beta/eta com extremos (t, resultado))

    Raises:
        InvalidSite: posição inexistente ou sem redex do tipo pedido
    """
    try:
        redex = subterm_at(t, site.position)
    except IndexError as e:
        raise InvalidSite(f"posição {list(site.position)} não existe no termo") from e

    if site.kind == "beta":
        if not is_beta_redex(redex):
            raise InvalidSite(f"não há redex β em {list(site.position)}")
        contractum = substitute(redex.fun.body, redex.fun.binder, redex.arg)
    elif site.kind == "eta":
        if not is_eta_redex(redex):
            raise InvalidSite(f"não há redex η em {list(site.position)}")
        contractum = redex.body.fun
    else:
        raise InvalidSite(f"tipo de redex desconhecido: {site.kind}")

    result = replace_at(t, site.position, contractum)
    return result, lambda_step(site.kind, t, result)


def _choose(sites: List[RedexSite], strategy: Strategy) -> RedexSite:
    if strategy == "leftmost_outermost":
        return sites[0]
    innermost = [
        s for s in sites
        if not any(o.position[: len(s.position)] == s.position and o.position != s.position for o in sites)
    ]
    return min(innermost, key=lambda s: s.position)


def compose_steps(start: LambdaTerm, steps: Sequence[PathTerm]) -> PathTerm:
    """τ(τ(s1,s2),s3)...; ρ quando não houve passos"""
    if not steps:
        return Rho(LambdaEndpoint(start))
    path = steps[0]
    for step in steps[1:]:
        path = Tau(path, step)
    return path


def path_to_normal_form(
    t: LambdaTerm,
    strategy: Strategy = "leftmost_outermost",
    fuel: int = None,
) -> Tuple[LambdaTerm, PathTerm]:
    """
    Reduz até a forma normal e compõe os passos num caminho

    Raises:
        FuelExhausted: mais de `fuel` contrações necessárias
    """
    fuel = fuel if fuel is not None else get_settings().lambda_fuel
    current, steps = t, []
    while True:
        sites = find_redexes(current)
        if not sites:
            break
        if len(steps) >= fuel:
            logger.warning(f"⚠️ Combustível esgotado após {fuel} passos")
            raise FuelExhausted(f"redução não terminou em {fuel} passos")
        current, step = contract(current, _choose(sites, strategy))
        steps.append(step)

    logger.info(f"✅ Forma normal λ em {len(steps)} passo(s) ({strategy})")
    return current, compose_steps(t, steps)


def path_along_sites(t: LambdaTerm, sites: Sequence[RedexSite]) -> Tuple[LambdaTerm, PathTerm]:
    """Contrai exatamente os sítios dados, em ordem, e compõe o caminho"""
    current, steps = t, []
    for site in sites:
        current, step = contract(current, site)
        steps.append(step)
    return current, compose_steps(t, steps)


def parse_sites(text: str) -> List[RedexSite]:
    """'0.0.1:eta,:beta' → [RedexSite((0,0,1), eta), RedexSite((), beta)]"""
    sites = []
    for chunk in filter(None, (c.strip() for c in text.split(","))):
        where, _, kind = chunk.partition(":")
        if kind not in ("beta", "eta"):
            raise TermSyntaxError(f"sítio sem tipo beta/eta: {chunk!r}")
        try:
            position = tuple(int(i) for i in where.split(".")) if where else ()
        except ValueError as e:
            raise TermSyntaxError(f"posição inválida no sítio {chunk!r}") from e
        sites.append(RedexSite(position, kind))
    return sites

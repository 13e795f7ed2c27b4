"""
Apresentações das superfícies: ponto base, geradores e regras de relação (co / cicl)
"""

from functools import lru_cache
from typing import Dict, Tuple

from config.logging_config import get_logger
from models.errors import UnknownSurface
from models.schemas import SurfacePresentation
from paths.terms import Atom, Axiom, generator
from rewriting.rules import CORE_RULESET, RewriteRule, RuleSet

logger = get_logger("surfaces.presentations")

SURFACES = ("circle", "cylinder", "moebius", "torus", "proj_plane")
CIRCLE_LIKE = ("circle", "cylinder", "moebius")

BASEPOINTS: Dict[str, str] = {
    "circle": "base",
    "cylinder": "x0",
    "moebius": "x0",
    "torus": "x0",
    "proj_plane": "P",
}

LOOP = "loop"
ALPHA = "a"
BETA = "b"


def _commutation_rules() -> Tuple[RewriteRule, ...]:
    """co: letras α passam para depois das letras β (na ordem de percurso)"""
    rules = []
    for x in (ALPHA, f"sigma({ALPHA})"):
        for y in (BETA, f"sigma({BETA})"):
            rules.append(RewriteRule("co", f"tau({x},{y})", f"tau({y},{x})"))
            rules.append(RewriteRule("co", f"tau({x},tau({y},v))", f"tau({y},tau({x},v))"))
    return tuple(rules)


def _cyclic_rules() -> Tuple[RewriteRule, ...]:
    """cicl: α∘α = ρ, e a consequência α = σ(α)"""
    return (
        RewriteRule("cicl", f"tau({ALPHA},{ALPHA})", "rho"),
        RewriteRule("cicl", f"tau({ALPHA},tau({ALPHA},v))", "v"),
        RewriteRule("cicl", f"sigma({ALPHA})", ALPHA),
    )


COMMUTATION_RULES = _commutation_rules()
CYCLIC_RULES = _cyclic_rules()
EXTENSION_RULES = COMMUTATION_RULES + CYCLIC_RULES


@lru_cache(maxsize=None)
def presentation(name: str) -> SurfacePresentation:
    """
    Apresentação da superfície `name`

    Raises:
        UnknownSurface: nome fora de circle, cylinder, moebius, torus, proj_plane
    """
    if name not in SURFACES:
        raise UnknownSurface(f"superfície desconhecida: {name} (use {', '.join(SURFACES)})")

    base = Atom(BASEPOINTS[name])
    if name in CIRCLE_LIKE:
        generators, relations = (generator(LOOP, base),), ()
    elif name == "torus":
        generators, relations = (generator(ALPHA, base), generator(BETA, base)), COMMUTATION_RULES
    else:
        generators, relations = (generator(ALPHA, base),), CYCLIC_RULES

    logger.debug(f"🗺️ Apresentação {name}: {len(generators)} gerador(es), {len(relations)} relação(ões)")
    return SurfacePresentation(name=name, basepoint=base, generators=generators, relation_rules=relations)


def generator_leaf(surface: SurfacePresentation, name: str) -> Axiom:
    for leaf in surface.generators:
        if leaf.name == name:
            return leaf
    raise KeyError(name)


def generator_names(surface: SurfacePresentation) -> Tuple[str, ...]:
    return tuple(leaf.name for leaf in surface.generators)


@lru_cache(maxsize=None)
def surface_ruleset(name: str) -> RuleSet:
    """As 39 regras seguidas das relações da superfície"""
    return CORE_RULESET.extended(presentation(name).relation_rules)

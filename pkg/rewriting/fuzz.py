"""
Gerador determinístico de termos de caminho bem formados para as suítes de propriedades
"""

import random
from typing import List, Literal, Optional, Sequence, Tuple

from paths.terms import (
    Atom,
    Axiom,
    Endpoint,
    Mu,
    MuKind,
    Nu,
    PathTerm,
    Rewr,
    Rho,
    Sigma,
    SubL,
    SubR,
    Tau,
    Var,
    Xi,
    XiKind,
)

Profile = Literal["groupoid", "full"]

DEFAULT_POOL: Tuple[Endpoint, ...] = (Atom("a"), Atom("b"), Atom("c"))
LEAF_NAMES = ("p", "q")
LEAF_PROBABILITY = 0.35

# (construtor, peso) por perfil
_GROUPOID_SHAPES = (("rho", 1), ("sigma", 3), ("tau", 4))
_FULL_SHAPES = _GROUPOID_SHAPES + (
    ("subL", 1), ("subR", 1), ("xi", 1), ("mu", 1), ("nu", 1), ("rewr", 1),
)


class _Generator:
    def __init__(self, rng: random.Random, pool: Sequence[Endpoint], profile: Profile):
        self.rng = rng
        self.pool = list(pool)
        self.shapes = _GROUPOID_SHAPES if profile == "groupoid" else _FULL_SHAPES
        self.binders = 0

    def endpoint(self) -> Endpoint:
        return self.rng.choice(self.pool)

    def leaf(self, source: Endpoint, target: Endpoint, env: List[Var]) -> PathTerm:
        usable = [v for v in env if v.source == source and v.target == target]
        if usable and self.rng.random() < 0.5:
            return self.rng.choice(usable)
        if source == target and self.rng.random() < 0.2:
            return Rho(source)
        return Axiom("generator", self.rng.choice(LEAF_NAMES), source, target)

    def path(self, depth: int, source: Endpoint, target: Endpoint, env: List[Var]) -> PathTerm:
        if depth <= 1 or self.rng.random() < LEAF_PROBABILITY:
            return self.leaf(source, target, env)

        shapes = [(s, w) for s, w in self.shapes if s != "rho" or source == target]
        names, weights = zip(*shapes)
        shape = self.rng.choices(names, weights=weights)[0]
        below = depth - 1

        if shape == "rho":
            return Rho(source)
        if shape == "sigma":
            return Sigma(self.path(below, target, source, env))
        if shape in ("tau", "subL", "subR"):
            middle = self.endpoint()
            left = self.path(below, source, middle, env)
            right = self.path(below, middle, target, env)
            return {"tau": Tau, "subL": SubL, "subR": SubR}[shape](left, right)
        if shape == "xi":
            kind = self.rng.choice(list(XiKind))
            arity = self.rng.choice((1, 2)) if kind is XiKind.XI else (2 if kind is XiKind.XI_AND else 1)
            return Xi(kind, tuple(self.path(below, source, target, env) for _ in range(arity)))
        if shape == "mu":
            kind = self.rng.choice(list(MuKind))
            arity = self.rng.choice((1, 2, 3)) if kind is MuKind.MU else 1
            return Mu(kind, tuple(self.path(below, source, target, env) for _ in range(arity)))
        if shape == "nu":
            return Nu(self.path(below, source, target, env))

        # rewr: escrutinado com extremos livres, corpo pode usar a variável
        self.binders += 1
        binder = f"g{self.binders}"
        m_source, m_target = self.endpoint(), self.endpoint()
        scrutinee = self.path(below, m_source, m_target, env)
        variable = Var(binder, m_source, m_target)
        body = self.path(below, source, target, env + [variable])
        return Rewr(scrutinee, binder, body)


def random_path(
    seed: int,
    max_depth: int,
    endpoint_pool: Optional[Sequence[Endpoint]] = None,
    profile: Profile = "groupoid",
) -> PathTerm:
    """Termo bem formado, determinístico por semente, com profundidade ≤ max_depth"""
    if max_depth < 1:
        raise ValueError("max_depth deve ser ≥ 1")
    rng = random.Random(seed)
    generator = _Generator(rng, endpoint_pool or DEFAULT_POOL, profile)
    source, target = generator.endpoint(), generator.endpoint()
    return generator.path(max_depth, source, target, [])

"""
Termos λ fortemente normalizantes gerados a partir de combinadores afins

I, K e η-expansões de variáveis livres só encolhem o termo a cada contração,
então qualquer aplicação entre eles termina.
"""

import random
from typing import List

from lambdas.terms import Abs, App, LambdaTerm, Var

FREE_NAMES = ("a", "b", "c")


def identity() -> LambdaTerm:
    return Abs("x", Var("x"))


def constant() -> LambdaTerm:
    return Abs("x", Abs("y", Var("x")))


def eta_expanded(name: str) -> LambdaTerm:
    return Abs("w", App(Var(name), Var("w")))


def _atom(rng: random.Random) -> LambdaTerm:
    pick = rng.randrange(4)
    if pick == 0:
        return identity()
    if pick == 1:
        return constant()
    if pick == 2:
        return eta_expanded(rng.choice(FREE_NAMES))
    return Var(rng.choice(FREE_NAMES))


def _term(rng: random.Random, depth: int) -> LambdaTerm:
    if depth <= 1 or rng.random() < 0.3:
        return _atom(rng)
    return App(_term(rng, depth - 1), _term(rng, depth - 1))


def normalizing_pool(seed: int, count: int, max_depth: int = 6) -> List[LambdaTerm]:
    """`count` termos determinísticos por semente, profundidade de aplicação ≤ max_depth"""
    rng = random.Random(seed)
    return [_term(rng, max_depth) for _ in range(count)]

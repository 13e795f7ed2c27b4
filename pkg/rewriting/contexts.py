"""
Contextos de um buraco e antiunificação (common_context)

Um contexto é representado pelo termo-moldura e pela posição do buraco. Buracos só são
admissíveis sob nós de congruência (σ, ξ, μ, ν): abaixo de τ, subL, subR ou rewr a
regra de contexto apagaria elementos do grupo.
"""

from dataclasses import dataclass
from typing import List, Optional, Tuple

from models.errors import NoCommonShape
from paths.terms import (
    Mu,
    Nu,
    PathTerm,
    Position,
    Sigma,
    Xi,
    ancestors,
    replace_at,
    subterm_at,
)
from rewriting.patterns import node_head

CONGRUENCE_NODES = (Sigma, Xi, Mu, Nu)
HOLE = "·"


@dataclass(frozen=True)
class Context:
    frame: PathTerm
    hole: Position

    @property
    def is_trivial(self) -> bool:
        return not self.hole

    def residue(self) -> PathTerm:
        return subterm_at(self.frame, self.hole)

    def plug(self, value: PathTerm) -> PathTerm:
        return replace_at(self.frame, self.hole, value)

    def __str__(self):
        return _format_with_hole(self.frame, self.hole)


TRIVIAL_HOLE: Position = ()


def _format_with_hole(term: PathTerm, hole: Position) -> str:
    if not hole:
        return HOLE
    parts = []
    for index, kid in enumerate(term.children):
        parts.append(_format_with_hole(kid, hole[1:]) if index == hole[0] else str(kid))
    name = node_head(term)
    if name == "rewr":
        return f"rewr({parts[0]},{term.binder}.{parts[1]})"
    return f"{name}(" + ",".join(parts) + ")"


def _same_shell(a: PathTerm, b: PathTerm) -> bool:
    """Mesmo construtor e mesmos dados não recursivos"""
    if type(a) is not type(b) or len(a.children) != len(b.children):
        return False
    if not a.children:
        return False
    return a._head() == b._head()


def differing_positions(a: PathTerm, b: PathTerm, prefix: Position = ()) -> List[Position]:
    """Posições maximais em que `a` e `b` divergem"""
    if a == b:
        return []
    if not _same_shell(a, b):
        return [prefix]
    found: List[Position] = []
    for index, (x, y) in enumerate(zip(a.children, b.children)):
        found.extend(differing_positions(x, y, prefix + (index,)))
    return found


def common_context(a: PathTerm, b: PathTerm) -> Optional[Tuple[Context, PathTerm, PathTerm]]:
    """
    Contexto comum menos geral de `a` e `b` e os resíduos no buraco

    Returns:
        None quando a == b (contexto ambíguo; quem chama usa o buraco trivial)

    Raises:
        NoCommonShape: se os termos divergem em mais de uma posição maximal
    """
    diffs = differing_positions(a, b)
    if not diffs:
        return None
    if len(diffs) > 1:
        raise NoCommonShape(
            f"termos divergem em {len(diffs)} posições: {[list(d) for d in diffs]}"
        )
    hole = diffs[0]
    return Context(a, hole), subterm_at(a, hole), subterm_at(b, hole)


def is_admissible(frame: PathTerm, hole: Position) -> bool:
    node = frame
    for index in hole:
        if not isinstance(node, CONGRUENCE_NODES):
            return False
        node = node.children[index]
    return True


def candidate_holes(a: PathTerm, b: PathTerm) -> List[Position]:
    """Buracos a tentar para o par (C[x], C[y]), do mais profundo à raiz"""
    try:
        found = common_context(a, b)
    except NoCommonShape:
        return []
    if found is None:
        return [TRIVIAL_HOLE]
    hole = found[0].hole
    chain = [hole] + list(ancestors(hole))
    return [h for h in chain if is_admissible(a, h)]

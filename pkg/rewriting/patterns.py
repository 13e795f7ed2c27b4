"""
Linguagem de padrões das regras de reescrita

    pat := "rho" | "C[" pat "]" | cabeça "(" pat ("," pat)* ")" | metavariável | literal

Metavariáveis são r, s, t, u, v; qualquer outro identificador é uma folha geradora literal
(ex.: `a`, `b` nas relações das superfícies). As cabeças `xi*` e `mu*` casam qualquer
tipo de ξ / μ com a aridade do padrão, e no lado direito repetem o tipo casado.
"""

from dataclasses import dataclass
from typing import Callable, Dict, Optional, Tuple

from pyparsing import (
    DelimitedList,
    Forward,
    Keyword,
    Literal,
    MatchFirst,
    ParseBaseException,
    ParserElement,
    Regex,
    Suppress,
)

from models.errors import TermSyntaxError
from paths.terms import (
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

ParserElement.enable_packrat()

METAVARIABLES = frozenset("rstuv")
CONTEXT = "C"

NODE_HEADS = ("sigma", "tau", "subL", "subR", "nu") + tuple(k.value for k in XiKind) + tuple(
    k.value for k in MuKind
)

# cabeças de família: qualquer tipo de ξ / μ
FAMILY_HEADS = {"xi*": Xi, "mu*": Mu}

Bindings = Dict[str, PathTerm]


# ============================================================
# AST dos padrões
# ============================================================

@dataclass(frozen=True)
class Pattern:
    pass


@dataclass(frozen=True)
class PMeta(Pattern):
    name: str


@dataclass(frozen=True)
class PRho(Pattern):
    pass


@dataclass(frozen=True)
class PLiteral(Pattern):
    """Folha geradora com nome fixo (qualquer par de extremos)"""

    name: str


@dataclass(frozen=True)
class PNode(Pattern):
    head: str
    children: Tuple[Pattern, ...]


@dataclass(frozen=True)
class PContext(Pattern):
    inner: Pattern


def node_head(term: PathTerm) -> str:
    if isinstance(term, (Xi, Mu)):
        return term.kind.value
    if isinstance(term, Rho):
        return "rho"
    if isinstance(term, Axiom):
        return "leaf"
    if isinstance(term, Var):
        return "var"
    if isinstance(term, Rewr):
        return "rewr"
    return {Sigma: "sigma", Tau: "tau", SubL: "subL", SubR: "subR", Nu: "nu"}[type(term)]


def build_node(head: str, children: Tuple[PathTerm, ...]) -> PathTerm:
    """Constrói o nó `head`; propaga EndpointMismatch/IllFormed"""
    if head == "sigma":
        return Sigma(children[0])
    if head == "tau":
        return Tau(children[0], children[1])
    if head == "subL":
        return SubL(children[0], children[1])
    if head == "subR":
        return SubR(children[0], children[1])
    if head == "nu":
        return Nu(children[0])
    if head in XiKind._value2member_map_:
        return Xi(XiKind(head), tuple(children))
    return Mu(MuKind(head), tuple(children))


# ============================================================
# Parser
# ============================================================

def _build_grammar() -> ParserElement:
    LP, RP, RB, COMMA = map(Suppress, "()],")
    pattern = Forward()

    rho = Keyword("rho").set_parse_action(lambda: PRho())
    context = (Suppress(Literal("C[")) + pattern + RB).set_parse_action(lambda t: PContext(t[0]))
    families = MatchFirst([Literal(h) for h in FAMILY_HEADS])
    heads = families | MatchFirst([Keyword(h) for h in sorted(NODE_HEADS, key=len, reverse=True)])
    node = (heads + LP + DelimitedList(pattern) + RP).set_parse_action(
        lambda t: PNode(t[0], tuple(t[1:]))
    )
    ident = Regex(r"[a-zA-Z][a-zA-Z0-9_]*").set_parse_action(
        lambda t: PMeta(t[0]) if t[0] in METAVARIABLES else PLiteral(t[0])
    )
    pattern <<= rho | context | node | ident
    return pattern


_GRAMMAR = _build_grammar()


def parse_pattern(text: str) -> Pattern:
    try:
        return _GRAMMAR.parse_string(text, parse_all=True)[0]
    except ParseBaseException as e:
        raise TermSyntaxError(f"padrão inválido: {e.msg}", e.loc) from e


def format_pattern(p: Pattern) -> str:
    if isinstance(p, PMeta):
        return p.name
    if isinstance(p, PLiteral):
        return p.name
    if isinstance(p, PRho):
        return "rho"
    if isinstance(p, PContext):
        return f"{CONTEXT}[{format_pattern(p.inner)}]"
    return f"{p.head}(" + ",".join(format_pattern(c) for c in p.children) + ")"


def contains_rho(p: Pattern) -> bool:
    if isinstance(p, PRho):
        return True
    if isinstance(p, PContext):
        return contains_rho(p.inner)
    if isinstance(p, PNode):
        return any(contains_rho(c) for c in p.children)
    return False


def split_contexts(p: Pattern, slots: list) -> Pattern:
    """Troca cada C[inner] por uma metavariável interna `#Ck`, guardando os inner em `slots`"""
    if isinstance(p, PContext):
        slots.append(p.inner)
        return PMeta(f"#C{len(slots) - 1}")
    if isinstance(p, PNode):
        return PNode(p.head, tuple(split_contexts(c, slots) for c in p.children))
    return p


# ============================================================
# Casamento e instanciação
# ============================================================

def literal_slot(name: str) -> str:
    return f"={name}"


def family_slot(head: str) -> str:
    return f"*{head}"


def _head_matches(head: str, term: PathTerm, bindings: Bindings) -> Optional[Bindings]:
    family = FAMILY_HEADS.get(head)
    if family is None:
        return bindings if node_head(term) == head else None
    if not isinstance(term, family):
        return None
    slot = family_slot(head)
    bound = bindings.get(slot)
    if bound is None:
        extended = dict(bindings)
        extended[slot] = term
        return extended
    return bindings if bound.kind == term.kind else None


def match(pattern: Pattern, term: PathTerm, bindings: Bindings) -> Optional[Bindings]:
    """Casa `pattern` com `term`; devolve as ligações estendidas ou None"""
    if isinstance(pattern, PMeta):
        bound = bindings.get(pattern.name)
        if bound is None:
            extended = dict(bindings)
            extended[pattern.name] = term
            return extended
        return bindings if bound == term else None

    if isinstance(pattern, PRho):
        return bindings if isinstance(term, Rho) else None

    if isinstance(pattern, PLiteral):
        if not (isinstance(term, Axiom) and term.label == "generator" and term.name == pattern.name):
            return None
        slot = literal_slot(pattern.name)
        if slot in bindings:
            return bindings
        extended = dict(bindings)
        extended[slot] = term
        return extended

    if isinstance(pattern, PNode):
        if len(term.children) != len(pattern.children):
            return None
        current = _head_matches(pattern.head, term, bindings)
        if current is None:
            return None
        for sub_pattern, sub_term in zip(pattern.children, term.children):
            current = match(sub_pattern, sub_term, current)
            if current is None:
                return None
        return current

    raise TypeError(f"padrão de contexto deve ser separado antes do casamento: {pattern}")


def instantiate(
    pattern: Pattern,
    bindings: Bindings,
    rho_at: Optional[Endpoint] = None,
    plug: Optional[Callable[[PathTerm], PathTerm]] = None,
) -> PathTerm:
    """Monta o termo do lado direito; propaga erros de extremos"""
    if isinstance(pattern, PMeta):
        return bindings[pattern.name]
    if isinstance(pattern, PLiteral):
        return bindings[literal_slot(pattern.name)]
    if isinstance(pattern, PRho):
        return Rho(rho_at)
    if isinstance(pattern, PContext):
        return plug(instantiate(pattern.inner, bindings, rho_at, plug))
    children = tuple(instantiate(c, bindings, rho_at, plug) for c in pattern.children)
    if pattern.head in FAMILY_HEADS:
        return build_node(bindings[family_slot(pattern.head)].kind.value, children)
    return build_node(pattern.head, children)

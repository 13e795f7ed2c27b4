"""
Tabela das 39 regras do sistema de reescrita LND_EQ-TRS

Cada regra é escrita como texto na linguagem de padrões e compilada uma vez. Regras de
contexto (C[·]) escolhem o buraco por antiunificação; toda aplicação candidata cujo
contrato falha na construção ou altera os extremos do redex é descartada.
"""

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from config.logging_config import get_logger
from models.errors import PathEngineError, UnknownRule
from paths.terms import Endpoint, PathTerm, subterm_at
from rewriting.contexts import Context, candidate_holes
from rewriting.patterns import (
    Bindings,
    Pattern,
    PNode,
    contains_rho,
    format_pattern,
    instantiate,
    match,
    parse_pattern,
    split_contexts,
)

logger = get_logger("rewriting.rules")

# (rótulo, lado esquerdo, lado direito) na ordem do sistema
RULE_TABLE: Tuple[Tuple[str, str, str], ...] = (
    ("sr", "sigma(rho)", "rho"),
    ("ss", "sigma(sigma(r))", "r"),
    ("tr", "tau(C[r],C[sigma(r)])", "C[rho]"),
    ("tsr", "tau(C[sigma(r)],C[r])", "C[rho]"),
    ("trr", "tau(C[r],C[rho])", "C[r]"),
    ("tlr", "tau(C[rho],C[r])", "C[r]"),
    ("slr", "subL(C[r],C[rho])", "C[r]"),
    ("srr", "subR(C[rho],C[r])", "C[r]"),
    ("sls", "subL(subL(s,C[r]),C[sigma(r)])", "s"),
    ("slss", "subL(subL(s,C[sigma(r)]),C[r])", "s"),
    ("srs", "subR(C[s],subR(C[sigma(s)],r))", "r"),
    ("srrr", "subR(C[sigma(s)],subR(C[s],r))", "r"),
    ("mx2l1", "mu1(xi1(r))", "r"),
    ("mx2l2", "mu1(xiAnd(r,s))", "r"),
    ("mx2r1", "mu2(xiAnd(r,s))", "s"),
    ("mx2r2", "mu2(xi2(s))", "s"),
    ("mx3l", "mu(xi1(r),s,u)", "s"),
    ("mx3r", "mu(xi2(r),s,u)", "u"),
    ("mxl", "nu(xi(r))", "r"),
    ("mxr", "mu(xi2(r),s)", "s"),
    ("mx", "xi(mu1(r),mu2(r))", "r"),
    ("mxx", "mu(t,xi1(r),xi2(s))", "t"),
    ("xmr", "xi(nu(r))", "r"),
    ("mx1r", "mu(s,xi2(r))", "s"),
    ("stss", "sigma(tau(r,s))", "tau(sigma(s),sigma(r))"),
    ("ssbl", "sigma(subL(r,s))", "subR(sigma(s),sigma(r))"),
    ("ssbr", "sigma(subR(r,s))", "subL(sigma(s),sigma(r))"),
    # σ atravessa qualquer tipo de ξ / μ, preservando o tipo
    ("sx", "sigma(xi*(r))", "xi*(sigma(r))"),
    ("sxss", "sigma(xi*(s,r))", "xi*(sigma(s),sigma(r))"),
    ("sm", "sigma(mu*(r))", "mu*(sigma(r))"),
    ("smss", "sigma(mu(s,r))", "mu(sigma(s),sigma(r))"),
    ("smsss", "sigma(mu(r,u,v))", "mu(sigma(r),sigma(u),sigma(v))"),
    ("tsbll", "tau(r,subL(rho,s))", "subL(r,s)"),
    ("tsbrl", "tau(r,subR(s,rho))", "subL(r,s)"),
    ("tsblr", "tau(subL(r,s),t)", "tau(r,subR(s,t))"),
    ("tsbrr", "tau(subR(s,t),u)", "subR(s,tau(t,u))"),
    ("tt", "tau(tau(t,r),s)", "tau(t,tau(r,s))"),
    ("tts", "tau(C[u],tau(C[sigma(u)],v))", "v"),
    ("tst", "tau(C[sigma(u)],tau(C[u],v))", "v"),
)


def _value_endpoints(bindings: Bindings) -> List[Endpoint]:
    found = []
    for value in bindings.values():
        found.extend((value.source, value.target))
    return found


@dataclass(frozen=True)
class RewriteRule:
    """Regra orientada LHS ▷ RHS; `index` é None para regras de extensão"""

    label: str
    lhs_text: str
    rhs_text: str
    index: Optional[int] = None
    lhs: Pattern = field(init=False, repr=False, compare=False)
    rhs: Pattern = field(init=False, repr=False, compare=False)
    skeleton: Pattern = field(init=False, repr=False, compare=False)
    context_slots: Tuple[Pattern, ...] = field(init=False, repr=False, compare=False)
    needs_rho: bool = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        lhs = parse_pattern(self.lhs_text)
        rhs = parse_pattern(self.rhs_text)
        if not isinstance(lhs, PNode):
            raise ValueError(f"lado esquerdo de {self.label} precisa começar por um nó")
        slots: list = []
        skeleton = split_contexts(lhs, slots)
        object.__setattr__(self, "lhs", lhs)
        object.__setattr__(self, "rhs", rhs)
        object.__setattr__(self, "skeleton", skeleton)
        object.__setattr__(self, "context_slots", tuple(slots))
        object.__setattr__(self, "needs_rho", contains_rho(rhs))

    @property
    def head(self) -> str:
        return self.lhs.head

    @property
    def is_context_rule(self) -> bool:
        return bool(self.context_slots)

    def describe(self) -> str:
        prefix = self.index if self.index is not None else self.label
        return f"{prefix}. {format_pattern(self.lhs)} ▷ {format_pattern(self.rhs)}"

    # --- aplicação na raiz ---

    def apply(self, term: PathTerm) -> Optional[PathTerm]:
        """Contrato da regra na raiz de `term`, ou None se ela não dispara"""
        bindings = match(self.skeleton, term, {})
        if bindings is None:
            return None
        for candidate_bindings, context in self._context_choices(bindings):
            result = self._build(term, candidate_bindings, context)
            if result is not None:
                return result
        return None

    def _context_choices(self, bindings: Bindings):
        if not self.is_context_rule:
            yield bindings, None
            return
        first, second = bindings["#C0"], bindings["#C1"]
        for hole in candidate_holes(first, second):
            try:
                residue_first = subterm_at(first, hole)
                residue_second = subterm_at(second, hole)
            except IndexError:
                continue
            extended = match(self.context_slots[0], residue_first, bindings)
            if extended is None:
                continue
            extended = match(self.context_slots[1], residue_second, extended)
            if extended is None:
                continue
            yield extended, Context(first, hole)

    def _build(self, redex: PathTerm, bindings: Bindings, context: Optional[Context]) -> Optional[PathTerm]:
        plug = context.plug if context is not None else None
        if self.needs_rho:
            choices = [redex.source, redex.target] + _value_endpoints(bindings)
        else:
            choices = [None]

        tried = set()
        for rho_at in choices:
            marker = rho_at.key() if rho_at is not None else None
            if marker in tried:
                continue
            tried.add(marker)
            try:
                result = instantiate(self.rhs, bindings, rho_at, plug)
            except PathEngineError as e:
                logger.debug(f"🚫 {self.label}: contrato rejeitado na construção ({e.message})")
                continue
            if result.source.key() == redex.source.key() and result.target.key() == redex.target.key():
                return result
            logger.debug(f"🚫 {self.label}: contrato altera extremos, descartado")
        return None


def _compile_table() -> Tuple[RewriteRule, ...]:
    return tuple(
        RewriteRule(label, lhs, rhs, index)
        for index, (label, lhs, rhs) in enumerate(RULE_TABLE, start=1)
    )


CORE_RULES: Tuple[RewriteRule, ...] = _compile_table()


def rule_table() -> List[RewriteRule]:
    """As 39 regras, na ordem do sistema"""
    return list(CORE_RULES)


def lookup_rule(label: str, extra: Iterable[RewriteRule] = ()) -> List[RewriteRule]:
    """Regras com o rótulo dado (extensões podem compartilhar rótulo)"""
    found = [rule for rule in (*CORE_RULES, *extra) if rule.label == label]
    if not found:
        raise UnknownRule(f"regra desconhecida: {label}")
    return found


def rules_doc(label: str, extra: Iterable[RewriteRule] = ()) -> str:
    return "\n".join(rule.describe() for rule in lookup_rule(label, extra))


@dataclass(frozen=True)
class RuleSet:
    """Regras ativas em prioridade: as 39 do núcleo seguidas das extensões"""

    rules: Tuple[RewriteRule, ...] = CORE_RULES
    by_head: Dict[str, Tuple[RewriteRule, ...]] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        index: Dict[str, list] = {}
        for rule in self.rules:
            index.setdefault(rule.head, []).append(rule)
        object.__setattr__(self, "by_head", {head: tuple(rs) for head, rs in index.items()})

    def extended(self, extra: Sequence[RewriteRule]) -> "RuleSet":
        return RuleSet(self.rules + tuple(extra))

    def for_head(self, head: str) -> Tuple[RewriteRule, ...]:
        return self.by_head.get(head, ())

    def labelled(self, label: str) -> Tuple[RewriteRule, ...]:
        return tuple(rule for rule in self.rules if rule.label == label)


CORE_RULESET = RuleSet()

"""
Motor de reescrita: contração em um passo, normalização com trilha, rw-igualdade e
re-execução de trilhas
"""

import logging
import random
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Set, Tuple

from config.logging_config import get_logger
from config.settings import PolicyName, get_settings
from models.errors import EndpointMismatch, ReplayMismatch, StepLimitExceeded
from models.schemas import TraceDocument, TraceStep
from paths.syntax import parse_path
from paths.terms import Mu, Nu, PathTerm, Position, SubL, SubR, Xi, replace_at, subterm_at
from rewriting.patterns import node_head
from rewriting.rules import CORE_RULESET, RewriteRule, RuleSet

logger = get_logger("rewriting.engine")


@dataclass
class StrategyPolicy:
    """Escolha do redex: mais interno à esquerda, mais externo à esquerda ou aleatória com semente"""

    name: PolicyName = "leftmost_innermost"
    seed: Optional[int] = None
    _rng: random.Random = field(init=False, repr=False)

    def __post_init__(self):
        self._rng = random.Random(self.seed)

    @classmethod
    def innermost(cls) -> "StrategyPolicy":
        return cls("leftmost_innermost")

    @classmethod
    def outermost(cls) -> "StrategyPolicy":
        return cls("leftmost_outermost")

    @classmethod
    def seeded_random(cls, seed: int) -> "StrategyPolicy":
        return cls("random", seed)

    def choose(self, count: int) -> int:
        return self._rng.randrange(count)


def default_policy() -> StrategyPolicy:
    """Política das configurações; a aleatória usa a semente de PATHS_FUZZ_SEED"""
    settings = get_settings()
    seed = settings.fuzz_seed if settings.default_policy == "random" else None
    return StrategyPolicy(settings.default_policy, seed)


@dataclass(frozen=True)
class RewriteStep:
    rule: str
    position: Position
    before: PathTerm
    after: PathTerm


@dataclass
class RewriteTrace:
    """
    Passos de uma normalização a partir de `start`

    Cada passo é guardado como (regra, posição, contrato); os termos inteiros antes e
    depois de cada passo só são montados quando `steps` é consultado.
    """

    start: PathTerm
    edits: List[Tuple[str, Position, PathTerm]] = field(default_factory=list)
    _steps: List[RewriteStep] = field(default_factory=list, init=False, repr=False)

    def __len__(self):
        return len(self.edits)

    def __iter__(self):
        return iter(self.steps)

    def _last(self) -> PathTerm:
        return self._steps[-1].after if self._steps else self.start

    def record(self, rule: str, position: Position, contractum: PathTerm, after: Optional[PathTerm] = None) -> None:
        before = self._last() if after is not None and len(self._steps) == len(self.edits) else None
        self.edits.append((rule, position, contractum))
        if before is not None:
            self._steps.append(RewriteStep(rule, position, before, after))

    @property
    def steps(self) -> List[RewriteStep]:
        current = self._last()
        for rule, position, contractum in self.edits[len(self._steps):]:
            after = replace_at(current, position, contractum)
            self._steps.append(RewriteStep(rule, position, current, after))
            current = after
        return self._steps

    def rules_used(self) -> List[str]:
        return [rule for rule, _, _ in self.edits]

    def to_records(self) -> List[TraceStep]:
        return [
            TraceStep(
                index=index,
                rule=step.rule,
                position=list(step.position),
                before=str(step.before),
                after=str(step.after),
            )
            for index, step in enumerate(self.steps, start=1)
        ]

    def format_lines(self) -> List[str]:
        """Uma linha legível por passo"""
        return [
            f"step {record.index}: {record.rule} at {record.position}: {record.before} → {record.after}"
            for record in self.to_records()
        ]


def trace_document(start: PathTerm, normal_form: PathTerm, trace: RewriteTrace) -> TraceDocument:
    return TraceDocument(start=str(start), normal_form=str(normal_form), steps=trace.to_records())


# ============================================================
# Contração
# ============================================================

def _fire_at(subject: PathTerm, rules: RuleSet) -> Optional[Tuple[RewriteRule, PathTerm]]:
    for rule in rules.for_head(node_head(subject)):
        contractum = rule.apply(subject)
        if contractum is not None:
            return rule, contractum
    return None


Firing = Tuple[Position, RewriteRule, PathTerm]


def _first_firing(
    term: PathTerm, prefix: Position, rules: RuleSet, innermost: bool, known_normal: Optional[Set[PathTerm]]
) -> Optional[Firing]:
    """Primeiro redex em pós-ordem (innermost) ou pré-ordem (outermost)"""
    if known_normal is not None and term in known_normal:
        return None
    if not innermost:
        fired = _fire_at(term, rules)
        if fired is not None:
            return (prefix,) + fired
    for index, kid in enumerate(term.children):
        found = _first_firing(kid, prefix + (index,), rules, innermost, known_normal)
        if found is not None:
            return found
    if innermost:
        fired = _fire_at(term, rules)
        if fired is not None:
            return (prefix,) + fired
    if known_normal is not None:
        known_normal.add(term)
    return None


def _all_firings(
    term: PathTerm, prefix: Position, rules: RuleSet, known_normal: Optional[Set[PathTerm]], out: List[Firing]
) -> None:
    if known_normal is not None and term in known_normal:
        return
    before = len(out)
    fired = _fire_at(term, rules)
    if fired is not None:
        out.append((prefix,) + fired)
    for index, kid in enumerate(term.children):
        _all_firings(kid, prefix + (index,), rules, known_normal, out)
    if known_normal is not None and len(out) == before:
        known_normal.add(term)


def _select(
    p: PathTerm, policy: StrategyPolicy, rules: RuleSet, known_normal: Optional[Set[PathTerm]]
) -> Optional[Firing]:
    if policy.name == "random":
        firings: List[Firing] = []
        _all_firings(p, (), rules, known_normal, firings)
        return firings[policy.choose(len(firings))] if firings else None
    return _first_firing(p, (), rules, policy.name == "leftmost_innermost", known_normal)


def contract_once(
    p: PathTerm,
    policy: Optional[StrategyPolicy] = None,
    rules: RuleSet = CORE_RULESET,
    known_normal: Optional[Set[PathTerm]] = None,
) -> Optional[Tuple[PathTerm, str, Position]]:
    """
    Dispara exatamente uma regra em uma posição escolhida pela política

    Args:
        known_normal: subtermos já vistos sem redex (válido apenas para o mesmo `rules`)

    Returns:
        (contrato, rótulo da regra, posição) ou None se `p` está em forma normal
    """
    found = _select(p, policy or default_policy(), rules, known_normal)
    if found is None:
        return None
    position, rule, contractum = found
    return replace_at(p, position, contractum), rule.label, position


class _Normalization:
    """Estado de uma normalização: trilha, limite de passos e subtermos já normais"""

    def __init__(self, start: PathTerm, rules: RuleSet, step_limit: int):
        self.start = start
        self.rules = rules
        self.step_limit = step_limit
        self.trace = RewriteTrace(start)
        self.known_normal: Set[PathTerm] = set()

    def _record(self, rule: RewriteRule, position: Position, redex: PathTerm, contractum: PathTerm,
                after: Optional[PathTerm] = None) -> None:
        if len(self.trace) >= self.step_limit:
            logger.error(f"❌ Limite de {self.step_limit} passos excedido normalizando {self.start}")
            raise StepLimitExceeded(f"limite de {self.step_limit} passos excedido")
        self.trace.record(rule.label, position, contractum, after)
        if logger.isEnabledFor(logging.DEBUG):
            logger.debug(f"🔁 {rule.label} em {list(position)}: {redex} → {contractum}")

    def innermost(self, term: PathTerm, prefix: Position) -> PathTerm:
        """
        Leftmost-innermost de baixo para cima: normaliza os filhos da esquerda para a
        direita e só então tenta a raiz; um contrato é normalizado no mesmo nível
        """
        while term not in self.known_normal:
            kids = term.children
            if kids:
                normal_kids = []
                changed = False
                for index, kid in enumerate(kids):
                    normal = self.innermost(kid, prefix + (index,))
                    changed = changed or normal is not kid
                    normal_kids.append(normal)
                if changed:
                    term = term.with_children(tuple(normal_kids))
            fired = _fire_at(term, self.rules)
            if fired is None:
                self.known_normal.add(term)
                return term
            rule, contractum = fired
            self._record(rule, prefix, term, contractum)
            term = contractum
        return term

    def by_policy(self, policy: StrategyPolicy) -> PathTerm:
        current = self.start
        while True:
            found = _select(current, policy, self.rules, self.known_normal)
            if found is None:
                return current
            position, rule, contractum = found
            after = replace_at(current, position, contractum)
            self._record(rule, position, subterm_at(current, position), contractum, after)
            current = after


def normalize(
    p: PathTerm,
    step_limit: Optional[int] = None,
    policy: Optional[StrategyPolicy] = None,
    rules: RuleSet = CORE_RULESET,
) -> Tuple[PathTerm, RewriteTrace]:
    """
    Aplica contract_once até a forma normal

    Raises:
        StepLimitExceeded: se o limite (padrão: fator × size²) for atingido
    """
    if step_limit is None:
        step_limit = get_settings().step_limit(p.size)
    policy = policy or default_policy()

    run = _Normalization(p, rules, step_limit)
    if policy.name == "leftmost_innermost":
        normal_form = run.innermost(p, ())
    else:
        normal_form = run.by_policy(policy)

    logger.debug(f"✅ Forma normal em {len(run.trace)} passo(s) ({policy.name})")
    return normal_form, run.trace


# ============================================================
# rw-igualdade
# ============================================================

# nós fora do grupoide livre; com eles a tabela tem pares críticos não fechados
_NON_GROUPOID_NODES = (SubL, SubR, Xi, Mu, Nu)


def _in_groupoid_fragment(p: PathTerm) -> bool:
    pending = [p]
    while pending:
        term = pending.pop()
        if isinstance(term, _NON_GROUPOID_NODES):
            return False
        pending.extend(term.children)
    return True


def _every_firing(
    term: PathTerm, prefix: Position, rules: RuleSet, known_normal: Set[PathTerm], out: List[Firing]
) -> None:
    """Cada regra que dispara em cada posição, em pré-ordem"""
    if term in known_normal:
        return
    before = len(out)
    for rule in rules.for_head(node_head(term)):
        contractum = rule.apply(term)
        if contractum is not None:
            out.append((prefix, rule, contractum))
    for index, kid in enumerate(term.children):
        _every_firing(kid, prefix + (index,), rules, known_normal, out)
    if len(out) == before:
        known_normal.add(term)


def normal_forms(p: PathTerm, rules: RuleSet = CORE_RULESET, limit: Optional[int] = None) -> Set[PathTerm]:
    """
    Todas as formas normais alcançáveis a partir de `p`, seguindo todas as regras em todas as posições

    Raises:
        StepLimitExceeded: se a busca passar de `limit` termos visitados (padrão: PATHS_RW_SEARCH_LIMIT)
    """
    limit = limit or get_settings().rw_search_limit
    known_normal: Set[PathTerm] = set()
    seen = {p}
    pending = [p]
    found: Set[PathTerm] = set()
    while pending:
        term = pending.pop()
        firings: List[Firing] = []
        _every_firing(term, (), rules, known_normal, firings)
        if not firings:
            found.add(term)
            continue
        for position, _, contractum in firings:
            reduct = replace_at(term, position, contractum)
            if reduct in seen:
                continue
            if len(seen) >= limit:
                logger.error(f"❌ Busca de formas normais passou de {limit} termos")
                raise StepLimitExceeded(f"busca de formas normais passou de {limit} termos")
            seen.add(reduct)
            pending.append(reduct)
    return found


def rw_equal(p: PathTerm, q: PathTerm, rules: RuleSet = CORE_RULESET) -> bool:
    """
    Decide p =rw q

    No grupoide livre (ρ, σ, τ, folhas, REWR) compara as formas normais. Com subL, subR,
    ξ, μ ou ν, formas normais diferentes ainda podem vir de uma mesma classe: nesse caso
    procura uma forma normal alcançável a partir dos dois termos.
    """
    if p.source.key() != q.source.key() or p.target.key() != q.target.key():
        raise EndpointMismatch(
            f"caminhos em conjuntos diferentes: {p.source}→{p.target} vs {q.source}→{q.target}"
        )
    left, _ = normalize(p, rules=rules)
    right, _ = normalize(q, rules=rules)
    if left == right:
        return True
    if rules is CORE_RULESET and _in_groupoid_fragment(p) and _in_groupoid_fragment(q):
        return False
    logger.debug("🔎 Formas normais diferentes fora do grupoide: buscando forma normal comum")
    return not normal_forms(p, rules).isdisjoint(normal_forms(q, rules))


# ============================================================
# Re-execução de trilhas
# ============================================================

def apply_rule_at(p: PathTerm, label: str, position: Position, rules: RuleSet = CORE_RULESET) -> List[PathTerm]:
    """Contratos possíveis de `label` em `position` (extensões podem repetir rótulo)"""
    try:
        subject = subterm_at(p, position)
    except IndexError as e:
        raise ReplayMismatch(str(e)) from e
    results = []
    for rule in rules.labelled(label):
        contractum = rule.apply(subject)
        if contractum is not None:
            results.append(replace_at(p, position, contractum))
    return results


def replay_trace(start: PathTerm, steps: Iterable[RewriteStep], rules: RuleSet = CORE_RULESET) -> PathTerm:
    """
    Reaplica cada (regra, posição) registrada a partir de `start`

    Raises:
        ReplayMismatch: se algum passo não reproduz o `after` registrado
    """
    current = start
    for index, step in enumerate(steps, start=1):
        if step.before != current:
            raise ReplayMismatch(f"passo {index}: termo anterior não confere com a trilha")
        if step.after not in apply_rule_at(current, step.rule, step.position, rules):
            raise ReplayMismatch(
                f"passo {index}: {step.rule} em {list(step.position)} não produz {step.after}"
            )
        current = step.after
    return current


def replay_document(document: TraceDocument, rules: RuleSet = CORE_RULESET) -> PathTerm:
    """Re-executa um TraceDocument serializado e confere a forma normal declarada"""
    start = parse_path(document.start)
    steps = [
        RewriteStep(record.rule, tuple(record.position), parse_path(record.before), parse_path(record.after))
        for record in document.steps
    ]
    final = replay_trace(start, steps, rules)
    if final != parse_path(document.normal_form):
        raise ReplayMismatch("forma normal declarada difere da obtida na re-execução")
    return final

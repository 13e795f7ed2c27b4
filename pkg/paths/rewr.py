"""
Eliminação REWR: reduções β (substituição) e η (corpo é a própria variável)
e as construções de prova de reflexividade, simetria e transitividade
"""

from config.logging_config import get_logger
from models.errors import NotARedex
from paths.terms import (
    Endpoint,
    PathTerm,
    Rewr,
    Rho,
    Sigma,
    Tau,
    Var,
    path_var,
)

logger = get_logger("paths.rewr")


def fresh_binder(base: str, avoid) -> str:
    """g → g1 → g2 ... (identificadores precisam ficar na gramática)"""
    counter = 1
    while f"{base}{counter}" in avoid:
        counter += 1
    return f"{base}{counter}"


def _binders(term: PathTerm) -> set:
    found = set()
    if isinstance(term, Rewr):
        found.add(term.binder)
    for kid in term.children:
        found |= _binders(kid)
    return found


def _rename(term: PathTerm, old: str, new: str) -> PathTerm:
    replacement_cache = {}

    def replacement(var: Var) -> PathTerm:
        key = (var.source.key(), var.target.key())
        if key not in replacement_cache:
            replacement_cache[key] = Var(new, var.source, var.target)
        return replacement_cache[key]

    return _substitute(term, old, replacement)


def _substitute(term: PathTerm, name: str, replacement) -> PathTerm:
    if name not in term.free_path_vars:
        return term
    if isinstance(term, Var):
        return replacement(term)
    if isinstance(term, Rewr):
        scrutinee = _substitute(term.scrutinee, name, replacement)
        if term.binder == name:
            return Rewr(scrutinee, term.binder, term.body)
        return Rewr(scrutinee, term.binder, _substitute(term.body, name, replacement))
    return term.with_children(tuple(_substitute(k, name, replacement) for k in term.children))


def substitute_var(body: PathTerm, name: str, value: PathTerm) -> PathTerm:
    """body[value/name] evitando captura de variáveis livres de `value`"""
    if name not in body.free_path_vars:
        return body
    if isinstance(body, Var):
        return value
    if isinstance(body, Rewr):
        scrutinee = substitute_var(body.scrutinee, name, value)
        if body.binder == name:
            return Rewr(scrutinee, body.binder, body.body)
        binder, inner = body.binder, body.body
        if binder in value.free_path_vars and name in inner.free_path_vars:
            avoid = value.free_path_vars | inner.free_path_vars | _binders(inner) | {name}
            fresh = fresh_binder(binder, avoid)
            inner = _rename(inner, binder, fresh)
            binder = fresh
        return Rewr(scrutinee, binder, substitute_var(inner, name, value))
    return body.with_children(tuple(substitute_var(k, name, value) for k in body.children))


def rewr_beta(t: PathTerm) -> PathTerm:
    """REWR(m, g.h) ▷β h[m/g]"""
    if not isinstance(t, Rewr):
        raise NotARedex(f"rewr_beta exige um nó rewr, recebeu {type(t).__name__}")
    return substitute_var(t.body, t.binder, t.scrutinee)


def rewr_eta(t: PathTerm) -> PathTerm:
    """REWR(e, g.g) ▷η e"""
    if not isinstance(t, Rewr):
        raise NotARedex(f"rewr_eta exige um nó rewr, recebeu {type(t).__name__}")
    if not (isinstance(t.body, Var) and t.body.name == t.binder):
        raise NotARedex("rewr_eta exige corpo igual à variável ligada")
    return t.scrutinee


def reduce_rewr(p: PathTerm) -> PathTerm:
    """Elimina todos os nós REWR, de dentro para fora"""
    if not p.children:
        return p
    reduced = p.with_children(tuple(reduce_rewr(k) for k in p.children))
    if isinstance(reduced, Rewr):
        if isinstance(reduced.body, Var) and reduced.body.name == reduced.binder:
            return rewr_eta(reduced)
        return rewr_beta(reduced)
    return reduced


# Construções de prova (termos de prova das árvores de derivação)

def reflexivity_witness(a: Endpoint) -> PathTerm:
    return Rho(a)


def symmetry_witness(p: PathTerm, binder: str = "t") -> PathTerm:
    """REWR(p, t.σ(t))"""
    return Rewr(p, binder, Sigma(path_var(binder, p)))


def transitivity_witness(w: PathTerm, s: PathTerm, outer: str = "t", inner: str = "u") -> PathTerm:
    """REWR(w, t.REWR(s, u.τ(t,u)))"""
    body = Rewr(s, inner, Tau(path_var(outer, w), path_var(inner, s)))
    witness = Rewr(w, outer, body)
    logger.debug(f"🔗 Testemunha de transitividade: {witness}")
    return witness

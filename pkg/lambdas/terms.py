"""
Termos do λ-cálculo não tipado: sintaxe, variáveis livres, α-equivalência e substituição

Os nomes são preservados para impressão; igualdade e hash usam a forma localmente
sem nomes (índices de De Bruijn para variáveis ligadas, nomes para as livres).
"""

from dataclasses import dataclass, field
from functools import reduce
from typing import FrozenSet, Iterable, Tuple

from pyparsing import (
    Forward,
    Literal,
    OneOrMore,
    Optional as Opt,
    ParseBaseException,
    ParserElement,
    Regex,
    Suppress,
)

from models.errors import TermSyntaxError

ParserElement.enable_packrat()

Position = Tuple[int, ...]


@dataclass(frozen=True, eq=False)
class LambdaTerm:
    """Base dos termos λ; igualdade é α-equivalência"""

    _key: tuple = field(default=None, init=False, repr=False)

    def key(self) -> tuple:
        cached = self._key
        if cached is None:
            cached = _index_form(self, ())
            object.__setattr__(self, "_key", cached)
        return cached

    def __eq__(self, other):
        if not isinstance(other, LambdaTerm):
            return NotImplemented
        return self is other or self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __str__(self):
        return format_lambda(self)


@dataclass(frozen=True, eq=False)
class Var(LambdaTerm):
    name: str = ""


@dataclass(frozen=True, eq=False)
class Abs(LambdaTerm):
    binder: str = ""
    body: LambdaTerm = None


@dataclass(frozen=True, eq=False)
class App(LambdaTerm):
    fun: LambdaTerm = None
    arg: LambdaTerm = None


def _index_form(term: LambdaTerm, env: Tuple[str, ...]) -> tuple:
    if isinstance(term, Var):
        if term.name in env:
            return ("b", env.index(term.name))
        return ("f", term.name)
    if isinstance(term, Abs):
        return ("λ", _index_form(term.body, (term.binder,) + env))
    return ("@", _index_form(term.fun, env), _index_form(term.arg, env))


def alpha_eq(a: LambdaTerm, b: LambdaTerm) -> bool:
    """Igualdade a menos de renomeação consistente de variáveis ligadas"""
    return a.key() == b.key()


def free_vars(term: LambdaTerm) -> FrozenSet[str]:
    if isinstance(term, Var):
        return frozenset((term.name,))
    if isinstance(term, Abs):
        return free_vars(term.body) - {term.binder}
    return free_vars(term.fun) | free_vars(term.arg)


def all_names(term: LambdaTerm) -> FrozenSet[str]:
    if isinstance(term, Var):
        return frozenset((term.name,))
    if isinstance(term, Abs):
        return all_names(term.body) | {term.binder}
    return all_names(term.fun) | all_names(term.arg)


def fresh_name(base: str, avoid: Iterable[str]) -> str:
    """y → y' → y'' ... até sair do conjunto evitado"""
    taken = set(avoid)
    candidate = base + "'"
    while candidate in taken:
        candidate += "'"
    return candidate


def substitute(term: LambdaTerm, name: str, value: LambdaTerm) -> LambdaTerm:
    """term[value/name], evitando captura"""
    if isinstance(term, Var):
        return value if term.name == name else term
    if isinstance(term, App):
        return App(fun=substitute(term.fun, name, value), arg=substitute(term.arg, name, value))

    if term.binder == name:
        return term
    body_free = free_vars(term.body)
    if name not in body_free:
        return term

    value_free = free_vars(value)
    if term.binder in value_free:
        renamed = fresh_name(term.binder, value_free | all_names(term.body) | {name})
        body = substitute(term.body, term.binder, Var(name=renamed))
        return Abs(binder=renamed, body=substitute(body, name, value))
    return Abs(binder=term.binder, body=substitute(term.body, name, value))


# Posições: Abs.body = 0; App.fun = 0, App.arg = 1

def children(term: LambdaTerm) -> Tuple[LambdaTerm, ...]:
    if isinstance(term, Abs):
        return (term.body,)
    if isinstance(term, App):
        return (term.fun, term.arg)
    return ()


def subterm_at(term: LambdaTerm, position: Position) -> LambdaTerm:
    current = term
    for index in position:
        kids = children(current)
        if index < 0 or index >= len(kids):
            raise IndexError(position)
        current = kids[index]
    return current


def replace_at(term: LambdaTerm, position: Position, value: LambdaTerm) -> LambdaTerm:
    if not position:
        return value
    head, rest = position[0], position[1:]
    if isinstance(term, Abs) and head == 0:
        return Abs(binder=term.binder, body=replace_at(term.body, rest, value))
    if isinstance(term, App) and head == 0:
        return App(fun=replace_at(term.fun, rest, value), arg=term.arg)
    if isinstance(term, App) and head == 1:
        return App(fun=term.fun, arg=replace_at(term.arg, rest, value))
    raise IndexError(position)


# Sintaxe: term := "\" ident "." term | app ; app := atom+ [abstração] ; atom := ident | "(" term ")"

_IDENT = Regex(r"[a-zA-Z][a-zA-Z0-9_']*")


def _build_grammar() -> ParserElement:
    term = Forward()
    variable = _IDENT.copy().set_parse_action(lambda t: Var(name=t[0]))
    abstraction = (
        Suppress(Literal("\\") | Literal("λ")) + _IDENT + Suppress(".") + term
    ).set_parse_action(lambda t: Abs(binder=t[0], body=t[1]))
    atom = variable | (Suppress("(") + term + Suppress(")"))
    application = (OneOrMore(atom) + Opt(abstraction)).set_parse_action(
        lambda t: reduce(lambda f, a: App(fun=f, arg=a), list(t))
    )
    term <<= abstraction | application
    return term


_GRAMMAR = _build_grammar()


def parse_lambda(text: str) -> LambdaTerm:
    """Converte texto em LambdaTerm; TermSyntaxError com posição se inválido"""
    try:
        return _GRAMMAR.parse_string(text, parse_all=True)[0]
    except ParseBaseException as e:
        raise TermSyntaxError(f"termo λ inválido: {e.msg}", e.loc) from e


def format_lambda(term: LambdaTerm) -> str:
    """Parênteses mínimos, aplicação associativa à esquerda, binders como \\x."""
    if isinstance(term, Var):
        return term.name
    if isinstance(term, Abs):
        return f"\\{term.binder}.{format_lambda(term.body)}"
    fun = format_lambda(term.fun)
    if isinstance(term.fun, Abs):
        fun = f"({fun})"
    arg = format_lambda(term.arg)
    if not isinstance(term.arg, Var):
        arg = f"({arg})"
    return f"{fun} {arg}"

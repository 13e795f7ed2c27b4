"""
Sintaxe textual dos termos de caminho: parse_path / format_path

Gramática:
    term := "rho[" atom "]" | "sigma(" term ")" | "tau(" term "," term ")"
          | "subL(" term "," term ")" | "subR(" term "," term ")"
          | xi/xi1/xi2/xiAnd/mu/mu1/mu2 "(" term ("," term)* ")" | "nu(" term ")"
          | ident "[" atom "," atom "]" | "rewr(" term "," ident "." term ")" | ident
    atom := ident | "{" termo-λ "}"

Um identificador solto fora de binder abrevia a folha `t[t_src,t_tgt]`; dentro do corpo
de um rewr, o identificador ligado é a variável de caminho.
"""

from dataclasses import dataclass
from typing import Dict, List

from pyparsing import (
    DelimitedList,
    Forward,
    Keyword,
    MatchFirst,
    ParseBaseException,
    ParserElement,
    Regex,
    Suppress,
)

from lambdas.terms import parse_lambda
from models.errors import TermSyntaxError
from paths.terms import (
    IDENT_PATTERN,
    LAMBDA_STEP_LABELS,
    Atom,
    Axiom,
    Endpoint,
    LambdaEndpoint,
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

FORMER_KEYWORDS = [k.value for k in XiKind] + [k.value for k in MuKind]
RESERVED = ["rho", "sigma", "tau", "subL", "subR", "nu", "rewr"] + FORMER_KEYWORDS


@dataclass
class _Raw:
    """Nó da árvore sintática antes da resolução de binders"""

    kind: str
    items: list
    loc: int


def _raw(kind: str):
    return lambda s, loc, t: _Raw(kind, list(t), loc)


def _build_grammar() -> ParserElement:
    LP, RP, LB, RB, COMMA, DOT = map(Suppress, "()[],.")
    ident = Regex(IDENT_PATTERN)
    lambda_text = Regex(r"\{[^{}]*\}").set_parse_action(lambda t: _Raw("lambda", [t[0][1:-1]], 0))
    endpoint = lambda_text | ident.copy().set_parse_action(lambda t: _Raw("atom", [t[0]], 0))
    reserved = MatchFirst([Keyword(word) for word in RESERVED])

    term = Forward()
    rho = (Keyword("rho") + LB + endpoint + RB).set_parse_action(lambda s, loc, t: _Raw("rho", [t[1]], loc))
    sigma = (Suppress(Keyword("sigma")) + LP + term + RP).set_parse_action(_raw("sigma"))
    nu = (Suppress(Keyword("nu")) + LP + term + RP).set_parse_action(_raw("nu"))
    tau = (Suppress(Keyword("tau")) + LP + term + COMMA + term + RP).set_parse_action(_raw("tau"))
    sub_l = (Suppress(Keyword("subL")) + LP + term + COMMA + term + RP).set_parse_action(_raw("subL"))
    sub_r = (Suppress(Keyword("subR")) + LP + term + COMMA + term + RP).set_parse_action(_raw("subR"))
    former = (
        MatchFirst([Keyword(word) for word in FORMER_KEYWORDS]) + LP + DelimitedList(term) + RP
    ).set_parse_action(_raw("former"))
    rewr = (
        Suppress(Keyword("rewr")) + LP + term + COMMA + ident + DOT + term + RP
    ).set_parse_action(_raw("rewr"))
    leaf = (~reserved + ident + LB + endpoint + COMMA + endpoint + RB).set_parse_action(_raw("leaf"))
    bare = (~reserved + ident).set_parse_action(_raw("bare"))

    term <<= rho | sigma | tau | sub_l | sub_r | former | nu | rewr | leaf | bare
    return term


_GRAMMAR = _build_grammar()


def _endpoint(raw: _Raw) -> Endpoint:
    if raw.kind == "lambda":
        return LambdaEndpoint(parse_lambda(raw.items[0]))
    return Atom(raw.items[0])


def _resolve(raw: _Raw, env: Dict[str, PathTerm]) -> PathTerm:
    kind, items = raw.kind, raw.items
    if kind == "rho":
        return Rho(_endpoint(items[0]))
    if kind == "sigma":
        return Sigma(_resolve(items[0], env))
    if kind == "nu":
        return Nu(_resolve(items[0], env))
    if kind == "tau":
        return Tau(_resolve(items[0], env), _resolve(items[1], env))
    if kind == "subL":
        return SubL(_resolve(items[0], env), _resolve(items[1], env))
    if kind == "subR":
        return SubR(_resolve(items[0], env), _resolve(items[1], env))
    if kind == "former":
        name, args = items[0], tuple(_resolve(a, env) for a in items[1:])
        if name in XiKind._value2member_map_:
            return Xi(XiKind(name), args)
        return Mu(MuKind(name), args)
    if kind == "rewr":
        scrutinee = _resolve(items[0], env)
        binder = items[1]
        inner = dict(env)
        inner[binder] = Var(binder, scrutinee.source, scrutinee.target)
        return Rewr(scrutinee, binder, _resolve(items[2], inner))
    if kind == "leaf":
        name = items[0]
        label = name if name in LAMBDA_STEP_LABELS else "generator"
        return Axiom(label, name, _endpoint(items[1]), _endpoint(items[2]))
    # identificador solto
    name = items[0]
    if name in env:
        return env[name]
    if name in LAMBDA_STEP_LABELS:
        raise TermSyntaxError(f"{name} exige extremos explícitos", raw.loc)
    return Axiom("generator", name, Atom(f"{name}_src"), Atom(f"{name}_tgt"))


def parse_path(text: str) -> PathTerm:
    """
    Converte texto em PathTerm

    Raises:
        TermSyntaxError: texto fora da gramática (com posição)
        EndpointMismatch / IllFormed: texto bem formado sintaticamente mas sem extremos coerentes
    """
    try:
        raw = _GRAMMAR.parse_string(text, parse_all=True)[0]
    except ParseBaseException as e:
        raise TermSyntaxError(f"termo de caminho inválido: {e.msg}", e.loc) from e
    return _resolve(raw, {})


def format_path(p: PathTerm) -> str:
    """Forma textual canônica, sem espaços; parse_path(format_path(p)) == p"""
    parts: List[str] = []
    _emit(p, parts)
    return "".join(parts)


def _emit(p: PathTerm, out: List[str]) -> None:
    if isinstance(p, Rho):
        out.append(f"rho[{p.at}]")
    elif isinstance(p, Axiom):
        out.append(f"{p.name}[{p.source_point},{p.target_point}]")
    elif isinstance(p, Var):
        out.append(p.name)
    elif isinstance(p, Rewr):
        out.append("rewr(")
        _emit(p.scrutinee, out)
        out.append(f",{p.binder}.")
        _emit(p.body, out)
        out.append(")")
    else:
        out.append(_node_name(p) + "(")
        for index, kid in enumerate(p.children):
            if index:
                out.append(",")
            _emit(kid, out)
        out.append(")")


def _node_name(p: PathTerm) -> str:
    if isinstance(p, (Xi, Mu)):
        return p.kind.value
    names: Dict[type, str] = {Sigma: "sigma", Tau: "tau", SubL: "subL", SubR: "subR", Nu: "nu"}
    return names[type(p)]


"""
Termos de caminho computacional

Cada nó é uma dataclass imutável cujos extremos (source, target) são calculados e
verificados na construção: nenhum termo mal formado chega a existir. Igualdade e hash
usam uma chave canônica em que nomes de variáveis de caminho viram profundidade de binder.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import FrozenSet, Iterator, List, Optional, Tuple, Union

from lambdas.terms import LambdaTerm, format_lambda
from models.errors import EndpointMismatch, IllFormed

Position = Tuple[int, ...]

IDENT_PATTERN = r"[a-zA-Z][a-zA-Z0-9_]*"

AXIOM_LABELS = ("beta", "eta", "alpha", "generator")
LAMBDA_STEP_LABELS = ("beta", "eta", "alpha")


# ============================================================
# Extremos
# ============================================================

@dataclass(frozen=True)
class Atom:
    """Ponto nomeado (base, x0, P, a, b...)"""

    name: str

    def key(self) -> tuple:
        return ("atom", self.name)

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class LambdaEndpoint:
    """Termo λ usado como extremo; compara por α-equivalência"""

    term: LambdaTerm

    def key(self) -> tuple:
        return ("lambda", self.term.key())

    def __str__(self):
        return "{" + format_lambda(self.term) + "}"


Endpoint = Union[Atom, LambdaEndpoint]


def endpoint_kind(e: Endpoint) -> str:
    return "lambda" if isinstance(e, LambdaEndpoint) else "atom"


# ============================================================
# Formadores ξ / μ
# ============================================================

class XiKind(str, Enum):
    XI = "xi"
    XI1 = "xi1"
    XI2 = "xi2"
    XI_AND = "xiAnd"


class MuKind(str, Enum):
    MU = "mu"
    MU1 = "mu1"
    MU2 = "mu2"


# aridades admitidas por tipo de formador
ARITY = {
    XiKind.XI: (1, 2),
    XiKind.XI1: (1,),
    XiKind.XI2: (1,),
    XiKind.XI_AND: (2,),
    MuKind.MU: (1, 2, 3),
    MuKind.MU1: (1,),
    MuKind.MU2: (1,),
}


# ============================================================
# Nós
# ============================================================

@dataclass(frozen=True, eq=False)
class PathTerm:
    """Base de todos os nós; subclasses preenchem `_check` e `children`"""

    _source: Endpoint = field(default=None, init=False, repr=False)
    _target: Endpoint = field(default=None, init=False, repr=False)
    _size: int = field(default=0, init=False, repr=False)
    _depth: int = field(default=0, init=False, repr=False)
    _free: FrozenSet[str] = field(default=frozenset(), init=False, repr=False)
    _key: tuple = field(default=None, init=False, repr=False)
    _hash: int = field(default=0, init=False, repr=False)

    def __post_init__(self):
        source, target = self._check()
        kids = self.children
        object.__setattr__(self, "_source", source)
        object.__setattr__(self, "_target", target)
        object.__setattr__(self, "_size", 1 + sum(k._size for k in kids))
        object.__setattr__(self, "_depth", 1 + max((k._depth for k in kids), default=0))
        object.__setattr__(self, "_free", self._free_vars())
        # nomes de variáveis ficam fora do hash: termos α-equivalentes colidem
        object.__setattr__(self, "_hash", hash((self._head(), tuple(k._hash for k in kids))))

    # --- contrato das subclasses ---

    def _check(self) -> Tuple[Endpoint, Endpoint]:
        raise NotImplementedError

    @property
    def children(self) -> Tuple["PathTerm", ...]:
        return ()

    def with_children(self, kids: Tuple["PathTerm", ...]) -> "PathTerm":
        return self

    def _free_vars(self) -> FrozenSet[str]:
        free = frozenset()
        for kid in self.children:
            free = free | kid._free
        return free

    def _head(self) -> tuple:
        """Parte não recursiva da chave canônica"""
        return (type(self).__name__,)

    # --- acesso ---

    @property
    def source(self) -> Endpoint:
        return self._source

    @property
    def target(self) -> Endpoint:
        return self._target

    @property
    def size(self) -> int:
        return self._size

    @property
    def depth(self) -> int:
        return self._depth

    @property
    def free_path_vars(self) -> FrozenSet[str]:
        return self._free

    # --- igualdade ---

    def key(self) -> tuple:
        return canonical_key(self, ())

    def __eq__(self, other):
        if not isinstance(other, PathTerm):
            return NotImplemented
        if self is other:
            return True
        if self._size != other._size:
            return False
        return self.key() == other.key()

    def __hash__(self):
        return self._hash

    def __str__(self):
        from paths.syntax import format_path

        return format_path(self)


def _same(a: Endpoint, b: Endpoint) -> bool:
    return a.key() == b.key()


def _require_path(name: str, value) -> PathTerm:
    if not isinstance(value, PathTerm):
        raise IllFormed(f"{name} exige um caminho, recebeu {value!r}")
    return value


def _require_endpoint(name: str, value) -> Endpoint:
    if not isinstance(value, (Atom, LambdaEndpoint)):
        raise IllFormed(f"extremo inválido em {name}: {value!r}")
    return value


def _show(e: Endpoint) -> str:
    return str(e)


@dataclass(frozen=True, eq=False)
class Rho(PathTerm):
    at: Endpoint = None

    def _check(self):
        if not isinstance(self.at, (Atom, LambdaEndpoint)):
            raise IllFormed(f"rho exige um extremo, recebeu {self.at!r}")
        return self.at, self.at

    def _head(self):
        return ("rho", self.at.key())


@dataclass(frozen=True, eq=False)
class Sigma(PathTerm):
    inner: PathTerm = None

    def _check(self):
        _require_path("sigma", self.inner)
        return self.inner.target, self.inner.source

    @property
    def children(self):
        return (self.inner,)

    def with_children(self, kids):
        return Sigma(kids[0])


def _compose_check(name: str, left: PathTerm, right: PathTerm) -> Tuple[Endpoint, Endpoint]:
    _require_path(name, left)
    _require_path(name, right)
    if not _same(left.target, right.source):
        raise EndpointMismatch(
            f"{name}: destino {_show(left.target)} da esquerda difere da origem "
            f"{_show(right.source)} da direita"
        )
    return left.source, right.target


@dataclass(frozen=True, eq=False)
class Tau(PathTerm):
    left: PathTerm = None
    right: PathTerm = None

    def _check(self):
        return _compose_check("tau", self.left, self.right)

    @property
    def children(self):
        return (self.left, self.right)

    def with_children(self, kids):
        return Tau(kids[0], kids[1])


@dataclass(frozen=True, eq=False)
class SubL(PathTerm):
    main: PathTerm = None
    sub: PathTerm = None

    def _check(self):
        return _compose_check("subL", self.main, self.sub)

    @property
    def children(self):
        return (self.main, self.sub)

    def with_children(self, kids):
        return SubL(kids[0], kids[1])


@dataclass(frozen=True, eq=False)
class SubR(PathTerm):
    main: PathTerm = None
    sub: PathTerm = None

    def _check(self):
        return _compose_check("subR", self.main, self.sub)

    @property
    def children(self):
        return (self.main, self.sub)

    def with_children(self, kids):
        return SubR(kids[0], kids[1])


def _former_check(kind: Enum, args: Tuple[PathTerm, ...]) -> Tuple[Endpoint, Endpoint]:
    if len(args) not in ARITY[kind]:
        raise IllFormed(f"{kind.value} não aceita {len(args)} argumento(s)")
    for arg in args:
        _require_path(kind.value, arg)
    first = args[0]
    for other in args[1:]:
        if not (_same(first.source, other.source) and _same(first.target, other.target)):
            raise EndpointMismatch(
                f"{kind.value}: argumentos não paralelos "
                f"({_show(first.source)}→{_show(first.target)} vs "
                f"{_show(other.source)}→{_show(other.target)})"
            )
    return first.source, first.target


@dataclass(frozen=True, eq=False)
class Xi(PathTerm):
    kind: XiKind = XiKind.XI
    args: Tuple[PathTerm, ...] = ()

    def _check(self):
        object.__setattr__(self, "kind", XiKind(self.kind))
        object.__setattr__(self, "args", tuple(self.args))
        return _former_check(self.kind, self.args)

    @property
    def children(self):
        return self.args

    def with_children(self, kids):
        return Xi(self.kind, tuple(kids))

    def _head(self):
        return ("xi", self.kind.value)


@dataclass(frozen=True, eq=False)
class Mu(PathTerm):
    kind: MuKind = MuKind.MU
    args: Tuple[PathTerm, ...] = ()

    def _check(self):
        object.__setattr__(self, "kind", MuKind(self.kind))
        object.__setattr__(self, "args", tuple(self.args))
        return _former_check(self.kind, self.args)

    @property
    def children(self):
        return self.args

    def with_children(self, kids):
        return Mu(self.kind, tuple(kids))

    def _head(self):
        return ("mu", self.kind.value)


@dataclass(frozen=True, eq=False)
class Nu(PathTerm):
    inner: PathTerm = None

    def _check(self):
        _require_path("nu", self.inner)
        return self.inner.source, self.inner.target

    @property
    def children(self):
        return (self.inner,)

    def with_children(self, kids):
        return Nu(kids[0])


@dataclass(frozen=True, eq=False)
class Axiom(PathTerm):
    """Folha: passo λ (beta/eta/alpha) ou gerador de superfície"""

    label: str = "generator"
    name: str = ""
    source_point: Endpoint = None
    target_point: Endpoint = None

    def _check(self):
        if self.label not in AXIOM_LABELS:
            raise IllFormed(f"rótulo de axioma desconhecido: {self.label}")
        if self.label in LAMBDA_STEP_LABELS and self.name != self.label:
            raise IllFormed(f"folha {self.label} deve se chamar {self.label}, não {self.name}")
        if self.label == "generator" and self.name in LAMBDA_STEP_LABELS:
            raise IllFormed(f"{self.name} é reservado para passos λ")
        for e in (self.source_point, self.target_point):
            _require_endpoint(self.name, e)
        if endpoint_kind(self.source_point) != endpoint_kind(self.target_point):
            raise IllFormed(f"{self.name} mistura extremo atômico e termo λ")
        return self.source_point, self.target_point

    def _head(self):
        return ("axiom", self.label, self.name, self.source_point.key(), self.target_point.key())


@dataclass(frozen=True, eq=False)
class Var(PathTerm):
    """Variável de caminho ligada por REWR; carrega os extremos do escrutinado"""

    name: str = ""
    source_point: Endpoint = None
    target_point: Endpoint = None

    def _check(self):
        if not isinstance(self.name, str) or not self.name:
            raise IllFormed(f"variável de caminho sem nome: {self.name!r}")
        source = _require_endpoint(self.name, self.source_point)
        target = _require_endpoint(self.name, self.target_point)
        if endpoint_kind(source) != endpoint_kind(target):
            raise IllFormed(f"{self.name} mistura extremo atômico e termo λ")
        return source, target

    def _free_vars(self):
        return frozenset((self.name,))


@dataclass(frozen=True, eq=False)
class Rewr(PathTerm):
    scrutinee: PathTerm = None
    binder: str = ""
    body: PathTerm = None

    def _check(self):
        _require_path("rewr", self.scrutinee)
        _require_path("rewr", self.body)
        for occurrence in var_occurrences(self.body, self.binder):
            if not (_same(occurrence.source, self.scrutinee.source)
                    and _same(occurrence.target, self.scrutinee.target)):
                raise EndpointMismatch(
                    f"rewr: variável {self.binder} usada com extremos "
                    f"{_show(occurrence.source)}→{_show(occurrence.target)}, escrutinado vai de "
                    f"{_show(self.scrutinee.source)} a {_show(self.scrutinee.target)}"
                )
        return self.body.source, self.body.target

    @property
    def children(self):
        return (self.scrutinee, self.body)

    def with_children(self, kids):
        return Rewr(kids[0], self.binder, kids[1])

    def _free_vars(self):
        return self.scrutinee._free | (self.body._free - {self.binder})


# ============================================================
# Chave canônica
# ============================================================

def canonical_key(term: PathTerm, env: Tuple[str, ...]) -> tuple:
    if not term._free or not env:
        if term._key is None:
            object.__setattr__(term, "_key", _compute_key(term, ()))
        return term._key
    return _compute_key(term, env)


def _compute_key(term: PathTerm, env: Tuple[str, ...]) -> tuple:
    if isinstance(term, Var):
        if term.name in env:
            return ("bvar", env.index(term.name))
        return ("fvar", term.name, term.source.key(), term.target.key())
    if isinstance(term, Rewr):
        return (
            "rewr",
            canonical_key(term.scrutinee, env),
            canonical_key(term.body, (term.binder,) + env),
        )
    head = term._head()
    return head + tuple(canonical_key(k, env) for k in term.children)


def var_occurrences(term: PathTerm, name: str) -> Iterator[Var]:
    """Ocorrências livres de Var(name)"""
    if name not in term._free:
        return
    if isinstance(term, Var):
        yield term
        return
    if isinstance(term, Rewr):
        yield from var_occurrences(term.scrutinee, name)
        if term.binder != name:
            yield from var_occurrences(term.body, name)
        return
    for kid in term.children:
        yield from var_occurrences(kid, name)


# ============================================================
# Construtores inteligentes
# ============================================================

def atom(name: str) -> Atom:
    return Atom(name)


def refl(e: Endpoint) -> PathTerm:
    return Rho(e)


def symm(p: PathTerm) -> PathTerm:
    return Sigma(p)


def trans(p: PathTerm, q: PathTerm) -> PathTerm:
    return Tau(p, q)


def sub_l(main: PathTerm, sub: PathTerm) -> PathTerm:
    return SubL(main, sub)


def sub_r(main: PathTerm, sub: PathTerm) -> PathTerm:
    return SubR(main, sub)


def xi(kind: Union[XiKind, str], *args: PathTerm) -> PathTerm:
    return Xi(XiKind(kind), tuple(args))


def mu(kind: Union[MuKind, str], *args: PathTerm) -> PathTerm:
    return Mu(MuKind(kind), tuple(args))


def nu(p: PathTerm) -> PathTerm:
    return Nu(p)


def generator(name: str, source: Endpoint, target: Optional[Endpoint] = None) -> Axiom:
    """Folha de gerador; sem `target` vira um laço em `source`"""
    return Axiom("generator", name, source, target if target is not None else source)


def lambda_step(label: str, before: LambdaTerm, after: LambdaTerm) -> Axiom:
    return Axiom(label, label, LambdaEndpoint(before), LambdaEndpoint(after))


def path_var(name: str, like: PathTerm) -> Var:
    """Variável com os extremos do escrutinado `like`"""
    return Var(name, like.source, like.target)


def rewr(scrutinee: PathTerm, binder: str, body: PathTerm) -> PathTerm:
    return Rewr(scrutinee, binder, body)


# ============================================================
# Extremos (avaliador estrutural independente) e medidas
# ============================================================

def endpoints(p: PathTerm) -> Tuple[Endpoint, Endpoint]:
    """
    Recalcula (source, target) recursivamente, sem usar os valores guardados

    Raises:
        IllFormed: se alguma composição interna não encaixa
    """
    if isinstance(p, Rho):
        return p.at, p.at
    if isinstance(p, (Axiom, Var)):
        return p.source_point, p.target_point
    if isinstance(p, Sigma):
        s, t = endpoints(p.inner)
        return t, s
    if isinstance(p, (Tau, SubL, SubR)):
        ls, lt = endpoints(p.children[0])
        rs, rt = endpoints(p.children[1])
        if not _same(lt, rs):
            raise IllFormed(f"composição interna não encaixa: {_show(lt)} vs {_show(rs)}")
        return ls, rt
    if isinstance(p, (Xi, Mu)):
        pairs = [endpoints(a) for a in p.args]
        first = pairs[0]
        for pair in pairs[1:]:
            if not (_same(pair[0], first[0]) and _same(pair[1], first[1])):
                raise IllFormed(f"{p.kind.value} com argumentos não paralelos")
        return first
    if isinstance(p, Nu):
        return endpoints(p.inner)
    if isinstance(p, Rewr):
        endpoints(p.scrutinee)
        return endpoints(p.body)
    raise IllFormed(f"nó desconhecido: {type(p).__name__}")


def size(p: PathTerm) -> int:
    return p.size


def depth(p: PathTerm) -> int:
    return p.depth


def leaves(p: PathTerm) -> Iterator[PathTerm]:
    if not p.children:
        yield p
        return
    for kid in p.children:
        yield from leaves(kid)


# ============================================================
# Posições
# ============================================================

def positions(p: PathTerm, prefix: Position = ()) -> Iterator[Position]:
    """Pré-ordem: nó antes dos filhos, filhos da esquerda para a direita"""
    yield prefix
    for index, kid in enumerate(p.children):
        yield from positions(kid, prefix + (index,))


def positions_postorder(p: PathTerm, prefix: Position = ()) -> Iterator[Position]:
    for index, kid in enumerate(p.children):
        yield from positions_postorder(kid, prefix + (index,))
    yield prefix


def subterm_at(p: PathTerm, position: Position) -> PathTerm:
    current = p
    for index in position:
        kids = current.children
        if index < 0 or index >= len(kids):
            raise IndexError(f"posição {list(position)} inválida")
        current = kids[index]
    return current


def replace_at(p: PathTerm, position: Position, value: PathTerm) -> PathTerm:
    """Reconstrói o caminho da raiz até `position`, revalidando cada nó"""
    if not position:
        return value
    kids: List[PathTerm] = list(p.children)
    index = position[0]
    if index < 0 or index >= len(kids):
        raise IndexError(f"posição {list(position)} inválida")
    kids[index] = replace_at(kids[index], position[1:], value)
    return p.with_children(tuple(kids))


def ancestors(position: Position) -> Iterator[Position]:
    """Prefixos próprios, do mais profundo à raiz"""
    for cut in range(len(position) - 1, -1, -1):
        yield position[:cut]

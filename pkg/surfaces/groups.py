"""
Grupos fundamentais: normalização de palavras, leitura da forma canônica,
isomorfismos toPath/toInteger e verificação das leis de grupo
"""

import random
from typing import Callable, List, Tuple, Union

from config.logging_config import get_logger
from models.errors import NonCanonicalResidue, SurfaceMismatch, WrongSurface
from models.schemas import (
    AxiomCheck,
    CanonicalElement,
    CircleZ,
    GroupAxiomReport,
    ProjZ2,
    SurfacePresentation,
    TorusZZ,
)
from paths.terms import Axiom, PathTerm, Rho, Sigma, Tau
from rewriting.engine import RewriteTrace, normalize
from surfaces.presentations import (
    ALPHA,
    BETA,
    CIRCLE_LIKE,
    LOOP,
    generator_leaf,
    generator_names,
    presentation,
    surface_ruleset,
)
from surfaces.words import Letter, LoopWord, letter_path, parse_word, word_to_path

logger = get_logger("surfaces.groups")

MAX_COUNTEREXAMPLES = 5

SurfaceRef = Union[str, SurfacePresentation]


def _surface(s: SurfaceRef) -> SurfacePresentation:
    return presentation(s) if isinstance(s, str) else s


def _succ(n: int) -> int:
    return n + 1


def _pred(n: int) -> int:
    return n - 1


# ============================================================
# Leitura da forma normal
# ============================================================

def _letter_of(surface: SurfacePresentation, p: PathTerm) -> Letter:
    sign = 1
    if isinstance(p, Sigma):
        sign, p = -1, p.inner
    if isinstance(p, Axiom) and p.label == "generator" and p.name in generator_names(surface):
        return Letter(p.name, sign)
    raise NonCanonicalResidue(f"{p} não é letra de {surface.name}")


def chain_letters(surface: SurfacePresentation, nf: PathTerm) -> List[Letter]:
    """ρ, uma letra, ou cadeia τ aninhada à direita de letras"""
    if isinstance(nf, Rho):
        return []
    letters = []
    current = nf
    while isinstance(current, Tau):
        letters.append(_letter_of(surface, current.left))
        current = current.right
    letters.append(_letter_of(surface, current))
    return letters


def _homogeneous(letters: List[Letter]) -> bool:
    return len({letter.sign for letter in letters}) <= 1


def read_canonical(surface: SurfacePresentation, nf: PathTerm) -> CanonicalElement:
    """
    Elemento canônico correspondente à forma normal

    Raises:
        NonCanonicalResidue: forma normal fora do formato esperado da superfície
    """
    letters = chain_letters(surface, nf)

    if surface.name in CIRCLE_LIKE:
        if not _homogeneous(letters):
            raise NonCanonicalResidue(f"forma normal com sinais misturados: {nf}")
        return CircleZ(n=winding_number(nf))

    if surface.name == "torus":
        split = next((i for i, letter in enumerate(letters) if letter.generator == ALPHA), len(letters))
        betas, alphas = letters[:split], letters[split:]
        if any(letter.generator != ALPHA for letter in alphas) or not (
            _homogeneous(betas) and _homogeneous(alphas)
        ):
            raise NonCanonicalResidue(f"forma normal fora de β^n α^m: {nf}")
        vertical, horizontal = _torus_counts(nf)
        return TorusZZ(n=horizontal, m=vertical)

    if len(letters) > 1 or any(letter.sign < 0 for letter in letters):
        raise NonCanonicalResidue(f"forma normal fora de ρ / α: {nf}")
    return ProjZ2(parity=len(letters))


def winding_number(p: PathTerm) -> int:
    """Recursão succ/pred sobre a cadeia: ρ ↦ 0, loop ∘ resto ↦ succ, σ(loop) ∘ resto ↦ pred"""
    if isinstance(p, Rho):
        return 0
    if isinstance(p, Tau):
        head, rest = p.left, winding_number(p.right)
    else:
        head, rest = p, 0
    return _pred(rest) if isinstance(head, Sigma) else _succ(rest)


def _torus_counts(p: PathTerm) -> Tuple[int, int]:
    """(contagem vertical α, contagem horizontal β) por recursão na cadeia"""
    if isinstance(p, Rho):
        return 0, 0
    if isinstance(p, Tau):
        head, (vertical, horizontal) = p.left, _torus_counts(p.right)
    else:
        head, vertical, horizontal = p, 0, 0
    step = _pred if isinstance(head, Sigma) else _succ
    leaf = head.inner if isinstance(head, Sigma) else head
    if leaf.name == ALPHA:
        return step(vertical), horizontal
    return vertical, step(horizontal)


def normalize_word(s: SurfaceRef, word: Union[LoopWord, str]) -> Tuple[CanonicalElement, RewriteTrace]:
    """Normaliza a palavra com as relações da superfície e lê o elemento canônico"""
    surface = _surface(s)
    if isinstance(word, str):
        word = parse_word(word)
    element, trace = normalize_path(surface, word_to_path(surface, word))
    logger.info(f"🌀 {surface.name}: palavra de {len(word)} letra(s) → {format_element(element)}")
    return element, trace


def normalize_path(surface: SurfacePresentation, p: PathTerm) -> Tuple[CanonicalElement, RewriteTrace]:
    nf, trace = normalize(p, rules=surface_ruleset(surface.name))
    return read_canonical(surface, nf), trace


# ============================================================
# Caminhos canônicos e isomorfismos
# ============================================================

def _expected_kind(surface: SurfacePresentation) -> type:
    if surface.name in CIRCLE_LIKE:
        return CircleZ
    return TorusZZ if surface.name == "torus" else ProjZ2


def _require(surface: SurfacePresentation, e: CanonicalElement) -> None:
    if not isinstance(e, _expected_kind(surface)):
        raise WrongSurface(f"{type(e).__name__} não é elemento de {surface.name}")


def _repeat(surface: SurfacePresentation, generator: str, count: int, tail: PathTerm) -> PathTerm:
    letter = Letter(generator, 1 if count > 0 else -1)
    for _ in range(abs(count)):
        tail = Tau(letter_path(surface, letter), tail)
    return tail


def canonical_path(s: SurfaceRef, e: CanonicalElement) -> PathTerm:
    """Representante em forma normal: loop^n, β^n α^m, ρ ou α"""
    surface = _surface(s)
    _require(surface, e)
    if isinstance(e, CircleZ):
        letters = [Letter(LOOP, 1 if e.n > 0 else -1)] * abs(e.n)
    elif isinstance(e, TorusZZ):
        letters = [Letter(BETA, 1 if e.n > 0 else -1)] * abs(e.n)
        letters += [Letter(ALPHA, 1 if e.m > 0 else -1)] * abs(e.m)
    else:
        letters = [Letter(ALPHA, 1)] * e.parity
    return word_to_path(surface, LoopWord.of(letters))


def to_path(n: int, s: SurfaceRef = "circle") -> PathTerm:
    """toPath(0) = ρ; toPath(n) = toPath(n-1) ∘ loop; toPath(n) = toPath(n+1) ∘ σ(loop)"""
    surface = _surface(s)
    if surface.name not in CIRCLE_LIKE:
        raise WrongSurface(f"to_path exige superfície do tipo círculo, recebeu {surface.name}")
    if n == 0:
        return Rho(surface.basepoint)
    loop = generator_leaf(surface, LOOP)
    if n > 0:
        return Tau(loop, to_path(n - 1, surface))
    return Tau(Sigma(loop), to_path(n + 1, surface))


def to_integer(e: CanonicalElement) -> int:
    """Número de voltas, pela recursão succ/pred sobre o representante canônico"""
    if not isinstance(e, CircleZ):
        raise WrongSurface(f"to_integer exige CircleZ, recebeu {type(e).__name__}")
    return winding_number(canonical_path("circle", e))


def to_path2(n: int, m: int) -> PathTerm:
    """toPath²(n,0) = toPath²(n∓1,0) ∘ α±; toPath²(n,m) = toPath²(n,m∓1) ∘ β±"""
    surface = presentation("torus")
    if m != 0:
        previous = to_path2(n, m - 1 if m > 0 else m + 1)
        return _repeat(surface, BETA, 1 if m > 0 else -1, previous)
    if n != 0:
        previous = to_path2(n - 1 if n > 0 else n + 1, 0)
        return _repeat(surface, ALPHA, 1 if n > 0 else -1, previous)
    return Rho(surface.basepoint)


def to_integer2(e: CanonicalElement) -> Tuple[int, int]:
    """(componente vertical, componente horizontal)"""
    if not isinstance(e, TorusZZ):
        raise WrongSurface(f"to_integer2 exige TorusZZ, recebeu {type(e).__name__}")
    return _torus_counts(canonical_path("torus", e))


def to_z2(e: CanonicalElement) -> int:
    if not isinstance(e, ProjZ2):
        raise WrongSurface(f"to_z2 exige ProjZ2, recebeu {type(e).__name__}")
    return len(chain_letters(presentation("proj_plane"), canonical_path("proj_plane", e)))


def from_z2(k: int) -> PathTerm:
    if k not in (0, 1):
        raise WrongSurface(f"from_z2 aceita 0 ou 1, recebeu {k}")
    surface = presentation("proj_plane")
    return generator_leaf(surface, ALPHA) if k else Rho(surface.basepoint)


# ============================================================
# Operação de grupo
# ============================================================

def compose(s: SurfaceRef, e1: CanonicalElement, e2: CanonicalElement) -> CanonicalElement:
    """e1 ∘ e2 = τ(e2, e1), normalizado"""
    surface = _surface(s)
    if type(e1) is not type(e2):
        raise SurfaceMismatch(f"{type(e1).__name__} e {type(e2).__name__} pertencem a superfícies diferentes")
    _require(surface, e1)
    path = Tau(canonical_path(surface, e2), canonical_path(surface, e1))
    return normalize_path(surface, path)[0]


def inverse(s: SurfaceRef, e: CanonicalElement) -> CanonicalElement:
    surface = _surface(s)
    _require(surface, e)
    return normalize_path(surface, Sigma(canonical_path(surface, e)))[0]


def format_element(e: CanonicalElement) -> str:
    if isinstance(e, CircleZ):
        return "rho" if e.n == 0 else f"loop^{e.n}"
    if isinstance(e, TorusZZ):
        return "rho" if (e.n, e.m) == (0, 0) else f"b^{e.n} a^{e.m}"
    return "alpha" if e.parity else "rho"


# ============================================================
# Verificação das leis de grupo
# ============================================================

class _AxiomTally:
    def __init__(self, name: str):
        self.name = name
        self.checked = 0
        self.failures: List[str] = []

    def record(self, ok: bool, describe: Callable[[], str]) -> None:
        self.checked += 1
        if ok:
            return
        if len(self.failures) < MAX_COUNTEREXAMPLES:
            self.failures.append(describe())
        elif len(self.failures) == MAX_COUNTEREXAMPLES:
            self.failures.append("...")

    def result(self) -> AxiomCheck:
        return AxiomCheck(
            axiom=self.name,
            passed=not self.failures,
            checked=self.checked,
            counterexamples=self.failures,
        )


def _random_word(rng: random.Random, surface: SurfacePresentation, max_length: int = 6) -> LoopWord:
    names = generator_names(surface)
    return LoopWord.of(
        Letter(rng.choice(names), rng.choice((1, -1))) for _ in range(rng.randint(0, max_length))
    )


def check_group_axioms(s: SurfaceRef, sample_size: int, seed: int) -> GroupAxiomReport:
    """Fechamento, identidade, inverso e associatividade por igualdade de formas normais"""
    surface = _surface(s)
    rules = surface_ruleset(surface.name)
    rng = random.Random(seed)
    rho = Rho(surface.basepoint)

    def nf(p: PathTerm) -> PathTerm:
        return normalize(p, rules=rules)[0]

    closure = _AxiomTally("closure")
    identity = _AxiomTally("identity")
    inverses = _AxiomTally("inverse")
    associativity = _AxiomTally("associativity")
    extra: List[_AxiomTally] = []

    for _ in range(sample_size):
        p, q, r = (word_to_path(surface, _random_word(rng, surface)) for _ in range(3))
        np_ = nf(p)

        try:
            read_canonical(surface, nf(Tau(p, q)))
            closed = True
        except NonCanonicalResidue:
            closed = False
        closure.record(closed, lambda: f"τ({p},{q})")

        identity.record(nf(Tau(p, rho)) == np_ and nf(Tau(rho, p)) == np_, lambda: str(p))
        inverses.record(nf(Tau(p, Sigma(p))) == rho and nf(Tau(Sigma(p), p)) == rho, lambda: str(p))
        associativity.record(
            nf(Tau(Tau(p, q), r)) == nf(Tau(p, Tau(q, r))), lambda: f"({p}, {q}, {r})"
        )

    if surface.name == "torus":
        commutator = _AxiomTally("commutator")
        commutator.record(
            nf(word_to_path(surface, parse_word("b a b^-1 a^-1"))) == rho, lambda: "b a b^-1 a^-1"
        )
        for _ in range(sample_size):
            p, q = (word_to_path(surface, _random_word(rng, surface)) for _ in range(2))
            commutator.record(
                nf(Tau(p, Tau(q, Tau(Sigma(p), Sigma(q))))) == rho, lambda: f"[{p}, {q}]"
            )
        extra.append(commutator)

    if surface.name == "proj_plane":
        self_inverse = _AxiomTally("alpha_self_inverse")
        alpha = generator_leaf(surface, ALPHA)
        self_inverse.record(nf(Sigma(alpha)) == alpha, lambda: "σ(α) ≠ α")
        self_inverse.record(nf(Tau(Sigma(alpha), alpha)) == rho, lambda: "σ(α) ∘ α ≠ ρ")
        self_inverse.record(nf(Tau(alpha, alpha)) == rho, lambda: "α ∘ α ≠ ρ")
        extra.append(self_inverse)

    report = GroupAxiomReport(
        surface=surface.name,
        sample_size=sample_size,
        seed=seed,
        checks=[t.result() for t in (closure, identity, inverses, associativity, *extra)],
    )
    status = "✅" if report.passed else "❌"
    logger.info(f"{status} Leis de grupo em {surface.name}: {sample_size} amostra(s), semente {seed}")
    return report

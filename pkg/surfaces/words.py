"""
Palavras de laços: `loop loop^-1 loop^3`, `b a b^-1 a^-1`
"""

from dataclasses import dataclass
from typing import Iterable, Tuple

from pyparsing import (
    Group,
    Optional as Opt,
    ParseBaseException,
    Regex,
    Suppress,
    ZeroOrMore,
)

from models.errors import ForeignGenerator, TermSyntaxError
from models.schemas import SurfacePresentation
from paths.terms import PathTerm, Rho, Sigma, Tau
from surfaces.presentations import generator_leaf, generator_names


@dataclass(frozen=True)
class Letter:
    generator: str
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sinal de expoente inválido: {self.sign}")

    def inverse(self) -> "Letter":
        return Letter(self.generator, -self.sign)


@dataclass(frozen=True)
class LoopWord:
    letters: Tuple[Letter, ...] = ()

    @classmethod
    def of(cls, letters: Iterable[Letter]) -> "LoopWord":
        return cls(tuple(letters))

    def __len__(self):
        return len(self.letters)

    def __add__(self, other: "LoopWord") -> "LoopWord":
        return LoopWord(self.letters + other.letters)

    def inverse(self) -> "LoopWord":
        return LoopWord(tuple(letter.inverse() for letter in reversed(self.letters)))

    def signed_count(self, generator: str) -> int:
        return sum(letter.sign for letter in self.letters if letter.generator == generator)


_LETTER = Group(
    Regex(r"[a-zA-Z][a-zA-Z0-9_]*") + Opt(Suppress("^") + Regex(r"[+-]?\d+"))
)
_WORD = ZeroOrMore(_LETTER)


def parse_word(text: str) -> LoopWord:
    """
    Letras separadas por espaço; `g^k` expande para |k| letras

    Raises:
        TermSyntaxError: texto fora da gramática ou expoente zero
    """
    try:
        parsed = _WORD.parse_string(text, parse_all=True)
    except ParseBaseException as e:
        raise TermSyntaxError(f"palavra inválida: {e.msg}", e.loc) from e

    letters = []
    for group in parsed:
        name = group[0]
        exponent = int(group[1]) if len(group) > 1 else 1
        if exponent == 0:
            raise TermSyntaxError(f"expoente zero em {name}^0")
        sign = 1 if exponent > 0 else -1
        letters.extend(Letter(name, sign) for _ in range(abs(exponent)))
    return LoopWord(tuple(letters))


def format_word(word: LoopWord) -> str:
    return " ".join(
        letter.generator if letter.sign > 0 else f"{letter.generator}^-1" for letter in word.letters
    )


def check_word(surface: SurfacePresentation, word: LoopWord) -> None:
    allowed = generator_names(surface)
    for letter in word.letters:
        if letter.generator not in allowed:
            raise ForeignGenerator(
                f"{letter.generator} não é gerador de {surface.name} (geradores: {', '.join(allowed)})"
            )


def letter_path(surface: SurfacePresentation, letter: Letter) -> PathTerm:
    leaf = generator_leaf(surface, letter.generator)
    return leaf if letter.sign > 0 else Sigma(leaf)


def word_to_path(surface: SurfacePresentation, word: LoopWord) -> PathTerm:
    """
    Cadeia τ aninhada à direita na ordem de percurso: l1 l2 ... ln ↦ τ(l1, τ(l2, ... ln))

    Raises:
        ForeignGenerator: letra fora da apresentação
    """
    check_word(surface, word)
    if not word.letters:
        return Rho(surface.basepoint)
    path = letter_path(surface, word.letters[-1])
    for letter in reversed(word.letters[:-1]):
        path = Tau(letter_path(surface, letter), path)
    return path

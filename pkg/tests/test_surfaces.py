import random

import pytest

from config.settings import get_settings
from models.errors import ForeignGenerator, SurfaceMismatch, TermSyntaxError, UnknownSurface, WrongSurface
from models.schemas import CircleZ, ProjZ2, TorusZZ
from paths.terms import Atom, Rho, Sigma, Tau
from surfaces.groups import (
    canonical_path,
    check_group_axioms,
    compose,
    format_element,
    from_z2,
    inverse,
    normalize_path,
    normalize_word,
    to_integer,
    to_integer2,
    to_path,
    to_path2,
    to_z2,
)
from surfaces.presentations import SURFACES, generator_leaf, presentation
from surfaces.words import Letter, LoopWord, format_word, parse_word, word_to_path

SEED = get_settings().fuzz_seed


def _random_word(rng: random.Random, names, max_length: int) -> LoopWord:
    return LoopWord.of(
        Letter(rng.choice(names), rng.choice((1, -1))) for _ in range(rng.randint(0, max_length))
    )


# ============================================================
# Apresentações e palavras
# ============================================================

def test_presentations():
    assert presentation("circle").basepoint == Atom("base")
    assert presentation("torus").basepoint == Atom("x0")
    assert presentation("proj_plane").basepoint == Atom("P")
    assert [g.name for g in presentation("torus").generators] == ["a", "b"]
    assert len(presentation("proj_plane").relation_rules) == 3
    assert presentation("moebius").relation_rules == ()


def test_unknown_surface():
    with pytest.raises(UnknownSurface):
        presentation("klein_bottle")


def test_parse_word_expands_exponents():
    word = parse_word("b a^2 b^-1")
    assert format_word(word) == "b a a b^-1"
    assert word.signed_count("a") == 2
    with pytest.raises(TermSyntaxError):
        parse_word("a^0")


def test_word_to_path_follows_traversal_order():
    circle = presentation("circle")
    loop = generator_leaf(circle, "loop")
    assert word_to_path(circle, parse_word("loop loop^-1")) == Tau(loop, Sigma(loop))
    assert word_to_path(circle, LoopWord()) == Rho(Atom("base"))


def test_foreign_generator():
    with pytest.raises(ForeignGenerator):
        word_to_path(presentation("circle"), parse_word("a"))


# ============================================================
# Normalização de palavras
# ============================================================

def test_circle_word_examples():
    assert normalize_word("circle", "loop loop loop^-1")[0] == CircleZ(n=1)
    assert normalize_word("cylinder", "loop^-3 loop")[0] == CircleZ(n=-2)


def test_torus_commutator_is_identity():
    element, trace = normalize_word("torus", "b a b^-1 a^-1")
    assert element == TorusZZ(n=0, m=0)
    assert "co" in trace.rules_used()


def test_proj_plane_examples():
    assert normalize_word("proj_plane", "a a")[0] == ProjZ2(parity=0)
    assert normalize_word("proj_plane", "a^-1")[0] == ProjZ2(parity=1)


@pytest.mark.slow
def test_circle_oracle_on_random_words():
    rng = random.Random(SEED)
    for _ in range(1_000):
        word = _random_word(rng, ("loop",), 200)
        assert normalize_word("circle", word)[0] == CircleZ(n=word.signed_count("loop"))


@pytest.mark.slow
def test_torus_oracle_on_random_words():
    rng = random.Random(SEED + 1)
    for _ in range(1_000):
        word = _random_word(rng, ("a", "b"), 100)
        expected = TorusZZ(n=word.signed_count("b"), m=word.signed_count("a"))
        assert normalize_word("torus", word)[0] == expected


@pytest.mark.slow
def test_proj_plane_oracle_on_random_words():
    rng = random.Random(SEED + 2)
    for _ in range(1_000):
        word = _random_word(rng, ("a",), 60)
        assert normalize_word("proj_plane", word)[0] == ProjZ2(parity=len(word) % 2)


# ============================================================
# Isomorfismos
# ============================================================

def test_to_integer_examples():
    assert to_integer(CircleZ(n=0)) == 0
    assert to_integer(CircleZ(n=3)) == 3
    assert to_integer(CircleZ(n=-2)) == -2
    with pytest.raises(WrongSurface):
        to_integer(ProjZ2(parity=1))


def test_to_path_examples():
    circle = presentation("circle")
    loop = generator_leaf(circle, "loop")
    assert to_path(0) == Rho(Atom("base"))
    assert to_path(2) == Tau(loop, Tau(loop, Rho(Atom("base"))))
    assert normalize_path(circle, to_path(-1))[0] == CircleZ(n=-1)
    with pytest.raises(WrongSurface):
        to_path(1, "torus")


def test_circle_round_trip():
    circle = presentation("circle")
    for n in range(-100, 101):
        element, _ = normalize_path(circle, to_path(n))
        assert to_integer(element) == n


def test_torus_examples():
    torus = presentation("torus")
    assert to_path2(0, 0) == Rho(Atom("x0"))
    assert normalize_path(torus, to_path2(1, 2))[0] == TorusZZ(n=2, m=1)
    with pytest.raises(WrongSurface):
        to_integer2(CircleZ(n=1))


@pytest.mark.slow
def test_torus_round_trip():
    torus = presentation("torus")
    for n in range(-20, 21):
        for m in range(-20, 21):
            element, _ = normalize_path(torus, to_path2(n, m))
            assert to_integer2(element) == (n, m)


def test_z2_round_trip():
    surface = presentation("proj_plane")
    assert from_z2(0) == Rho(Atom("P"))
    assert from_z2(1) == generator_leaf(surface, "a")
    for k in (0, 1):
        element, _ = normalize_path(surface, from_z2(k))
        assert to_z2(element) == k
    with pytest.raises(WrongSurface):
        from_z2(2)


def test_canonical_path_is_normal():
    torus = presentation("torus")
    element = TorusZZ(n=-2, m=3)
    assert normalize_path(torus, canonical_path(torus, element))[0] == element
    with pytest.raises(WrongSurface):
        canonical_path(torus, CircleZ(n=1))


# ============================================================
# Operação de grupo
# ============================================================

def test_compose_and_inverse_examples():
    assert compose("circle", CircleZ(n=2), CircleZ(n=-3)) == CircleZ(n=-1)
    assert inverse("torus", TorusZZ(n=2, m=-5)) == TorusZZ(n=-2, m=5)
    assert compose("proj_plane", ProjZ2(parity=1), ProjZ2(parity=1)) == ProjZ2(parity=0)
    with pytest.raises(SurfaceMismatch):
        compose("circle", CircleZ(n=1), TorusZZ(n=0, m=1))


def test_homomorphism_on_samples():
    rng = random.Random(SEED)
    for _ in range(50):
        n1, n2 = rng.randint(-8, 8), rng.randint(-8, 8)
        assert to_integer(compose("circle", CircleZ(n=n1), CircleZ(n=n2))) == n1 + n2
        e1 = TorusZZ(n=rng.randint(-4, 4), m=rng.randint(-4, 4))
        e2 = TorusZZ(n=rng.randint(-4, 4), m=rng.randint(-4, 4))
        assert compose("torus", e1, e2) == TorusZZ(n=e1.n + e2.n, m=e1.m + e2.m)


# (superfície, nomes dos geradores)
WORD_SURFACES = [("circle", ("loop",)), ("torus", ("a", "b")), ("proj_plane", ("a",))]


@pytest.mark.parametrize("surface, names", WORD_SURFACES)
def test_compose_agrees_with_word_concatenation(surface, names):
    rng = random.Random(SEED + 3)
    for _ in range(50):
        w1, w2 = (_random_word(rng, names, 8) for _ in range(2))
        e1, e2 = normalize_word(surface, w1)[0], normalize_word(surface, w2)[0]
        # e1 ∘ e2 = τ(e2, e1): percorre w2 e depois w1
        assert compose(surface, e1, e2) == normalize_word(surface, w2 + w1)[0]
        assert inverse(surface, e1) == normalize_word(surface, w1.inverse())[0]


def test_proj_plane_homomorphism_is_addition_mod_2():
    elements = [ProjZ2(parity=0), ProjZ2(parity=1)]
    for e1 in elements:
        for e2 in elements:
            assert to_z2(compose("proj_plane", e1, e2)) == (to_z2(e1) + to_z2(e2)) % 2
        assert to_z2(inverse("proj_plane", e1)) == to_z2(e1)


def test_proj_plane_parity_counts_letters():
    rng = random.Random(SEED + 4)
    for _ in range(50):
        word = _random_word(rng, ("a",), 12)
        assert to_z2(normalize_word("proj_plane", word)[0]) == len(word) % 2


def test_format_element():
    assert format_element(CircleZ(n=0)) == "rho"
    assert format_element(CircleZ(n=-4)) == "loop^-4"
    assert format_element(TorusZZ(n=1, m=-2)) == "b^1 a^-2"
    assert format_element(ProjZ2(parity=1)) == "alpha"


@pytest.mark.parametrize("surface", SURFACES)
def test_group_axioms_hold(surface):
    report = check_group_axioms(surface, 100, SEED)
    assert report.passed, [c for c in report.checks if not c.passed]
    assert {c.axiom for c in report.checks} >= {"closure", "identity", "inverse", "associativity"}


def test_surface_specific_checks():
    torus = check_group_axioms("torus", 10, SEED)
    assert "commutator" in [c.axiom for c in torus.checks]
    proj = check_group_axioms("proj_plane", 10, SEED)
    assert "alpha_self_inverse" in [c.axiom for c in proj.checks]


@pytest.mark.slow
@pytest.mark.parametrize("surface", SURFACES)
def test_group_axioms_hold_on_large_samples(surface):
    assert check_group_axioms(surface, 1_000, SEED).passed

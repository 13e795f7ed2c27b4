"""
Suítes de propriedades sobre termos gerados: terminação, confluência, rw-igualdade
como equivalência, preservação de extremos e re-execução de trilhas
"""

import random

import pytest

from config.settings import get_settings
from paths.terms import PathTerm, Rho, Sigma, Tau, endpoints
from rewriting.engine import StrategyPolicy, contract_once, normal_forms, normalize, replay_trace, rw_equal
from rewriting.fuzz import random_path

SEED = get_settings().fuzz_seed

pytestmark = pytest.mark.slow


def _sample(count: int, max_depth: int, profile: str = "groupoid", offset: int = 0):
    return [random_path(SEED + offset + i, max_depth, profile=profile) for i in range(count)]


def _variant(rng: random.Random, p: PathTerm) -> PathTerm:
    """Termo rw-igual a p por construção"""
    choices = [
        lambda: Tau(p, Rho(p.target)),
        lambda: Tau(Rho(p.source), p),
        lambda: Sigma(Sigma(p)),
        lambda: Tau(Tau(p, Sigma(p)), p),
    ]
    return rng.choice(choices)()


def test_generator_is_deterministic():
    assert random_path(SEED, 8) == random_path(SEED, 8)
    assert random_path(SEED, 8, profile="full") == random_path(SEED, 8, profile="full")


@pytest.mark.parametrize("profile", ["groupoid", "full"])
def test_generated_terms_respect_depth_and_are_well_formed(profile):
    for path in _sample(10_000, 12, profile):
        assert path.depth <= 12
        assert endpoints(path) == (path.source, path.target)


@pytest.mark.parametrize("profile", ["groupoid", "full"])
def test_termination_within_step_bound(profile):
    # normalize levanta StepLimitExceeded se passar de fator × size²
    for path in _sample(10_000, 12, profile):
        normal_form, _ = normalize(path)
        assert contract_once(normal_form) is None


def test_confluence_across_policies_on_groupoid():
    policies = [StrategyPolicy.innermost(), StrategyPolicy.outermost()]
    for index, path in enumerate(_sample(1_000, 10, offset=50_000)):
        forms = [normalize(path, policy=policy)[0] for policy in policies]
        forms.append(normalize(path, policy=StrategyPolicy.seeded_random(SEED + index))[0])
        assert forms[0] == forms[1] == forms[2], str(path)


@pytest.mark.parametrize("profile", ["groupoid", "full"])
def test_every_step_preserves_endpoints(profile):
    for path in _sample(1_000, 10, profile, offset=100_000):
        _, trace = normalize(path)
        for step in trace:
            assert (step.after.source, step.after.target) == (path.source, path.target)
            assert endpoints(step.after) == (path.source, path.target)


def test_traces_replay():
    for path in _sample(1_000, 10, "full", offset=150_000):
        normal_form, trace = normalize(path)
        assert replay_trace(path, trace) == normal_form


def test_rw_equal_is_an_equivalence():
    rng = random.Random(SEED)
    sample = _sample(1_000, 8, offset=200_000)
    for path in sample:
        assert rw_equal(path, path)

    by_endpoints = {}
    for path in sample:
        by_endpoints.setdefault((path.source, path.target), []).append(path)

    checked = 0
    for group in by_endpoints.values():
        for _ in range(len(group)):
            p, r = rng.choice(group), rng.choice(group)
            q = _variant(rng, p)
            assert rw_equal(p, q) and rw_equal(q, p)
            assert rw_equal(q, r) == rw_equal(r, q)
            if rw_equal(q, r):
                assert rw_equal(p, r)
            checked += 1
    assert checked == len(sample)


def _policies(index: int):
    return [StrategyPolicy.innermost(), StrategyPolicy.outermost(), StrategyPolicy.seeded_random(SEED + index)]


def test_policies_land_on_reachable_normal_forms_in_full_language():
    for index, path in enumerate(_sample(1_000, 6, "full", offset=250_000)):
        forms = {normalize(path, policy=policy)[0] for policy in _policies(index)}
        if len(forms) > 1:
            assert forms <= normal_forms(path), str(path)
        for form in forms:
            assert rw_equal(path, form) and rw_equal(form, path), str(path)


def test_rw_equal_relates_term_and_reducts_in_full_language():
    for index, path in enumerate(_sample(1_000, 6, "full", offset=300_000)):
        assert rw_equal(path, path)
        for policy in _policies(index):
            step = contract_once(path, policy)
            if step is None:
                continue
            reduct = step[0]
            assert rw_equal(path, reduct) and rw_equal(reduct, path), str(path)

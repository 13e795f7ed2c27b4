import logging

import pytest

import paths.syntax
from config.settings import get_settings
from models.errors import EndpointMismatch, ReplayMismatch, StepLimitExceeded
from models.schemas import TraceDocument
from paths.syntax import parse_path
from rewriting.engine import (
    RewriteStep,
    StrategyPolicy,
    contract_once,
    default_policy,
    normal_forms,
    normalize,
    replay_document,
    replay_trace,
    rw_equal,
    trace_document,
)
from rewriting.fuzz import random_path

# para em formas normais diferentes conforme tsbll ou tt dispara primeiro na raiz
OVERLAP = "tau(tau(p[a,b],q[b,c]),subL(rho[c],r[c,d]))"


def test_contract_once_returns_rule_and_position():
    term = parse_path("tau(p[a,b],sigma(sigma(q[b,c])))")
    after, label, position = contract_once(term, StrategyPolicy.innermost())
    assert label == "ss"
    assert position == (1,)
    assert after == parse_path("tau(p[a,b],q[b,c])")


def test_contract_once_on_normal_form():
    assert contract_once(parse_path("tau(p[a,b],q[b,c])")) is None


def test_outermost_prefers_root():
    term = parse_path("sigma(tau(p[a,b],sigma(sigma(q[b,c]))))")
    _, label, position = contract_once(term, StrategyPolicy.outermost())
    assert (label, position) == ("stss", ())
    _, label, position = contract_once(term, StrategyPolicy.innermost())
    assert (label, position) == ("ss", (0, 1))


def test_normalize_double_symmetry():
    normal_form, trace = normalize(parse_path("sigma(sigma(t[x,y]))"))
    assert str(normal_form) == "t[x,y]"
    assert trace.rules_used() == ["ss"]


def test_normalize_pushes_symmetry_inward():
    normal_form, _ = normalize(parse_path("sigma(tau(r[a,b],s[b,c]))"))
    assert normal_form == parse_path("tau(sigma(s[b,c]),sigma(r[a,b]))")


def test_normalize_cancels_inverse_pair():
    normal_form, trace = normalize(parse_path("tau(tau(p[a,b],sigma(p[a,b])),q[a,c])"))
    assert normal_form == parse_path("q[a,c]")
    assert trace.rules_used() == ["tr", "tlr"]


def test_normalize_preserves_endpoints_on_every_step():
    start = parse_path("sigma(tau(tau(p[a,b],q[b,c]),sigma(tau(p[a,b],q[b,c]))))")
    normal_form, trace = normalize(start)
    assert normal_form == parse_path("rho[a]")
    for step in trace:
        assert (step.after.source, step.after.target) == (start.source, start.target)


def test_step_limit_is_enforced():
    with pytest.raises(StepLimitExceeded):
        normalize(parse_path("sigma(sigma(sigma(sigma(p[a,b]))))"), step_limit=1)


def test_trace_records_are_indexed():
    start = parse_path("sigma(sigma(sigma(sigma(p[a,b]))))")
    normal_form, trace = normalize(start)
    records = trace.to_records()
    assert [r.index for r in records] == [1, 2]
    assert records[-1].after == "p[a,b]"
    assert trace.format_lines()[0].startswith("step 1: ss at [")


def test_rw_equal_examples():
    assert rw_equal(parse_path("sigma(sigma(t))"), parse_path("t"))
    assert rw_equal(parse_path("tau(t,rho[t_tgt])"), parse_path("t"))
    assert not rw_equal(parse_path("t[a,b]"), parse_path("u[a,b]"))


def test_rw_equal_rejects_different_endpoints():
    with pytest.raises(EndpointMismatch):
        rw_equal(parse_path("t"), parse_path("rho[x]"))


def test_seeded_random_policy_reaches_same_normal_form():
    start = parse_path("tau(sigma(tau(p[a,b],q[b,c])),tau(p[a,b],q[b,c]))")
    expected, _ = normalize(start)
    for seed in range(5):
        normal_form, _ = normalize(start, policy=StrategyPolicy.seeded_random(seed))
        assert normal_form == expected


def test_replay_reproduces_trace():
    start = parse_path("sigma(tau(tau(p[a,b],q[b,c]),r[c,a]))")
    normal_form, trace = normalize(start)
    assert replay_trace(start, trace) == normal_form
    document = TraceDocument.model_validate_json(trace_document(start, normal_form, trace).model_dump_json())
    assert replay_document(document) == normal_form


def test_replay_detects_tampered_step():
    start = parse_path("sigma(sigma(p[a,b]))")
    forged = [RewriteStep("sr", (), start, parse_path("p[a,b]"))]
    with pytest.raises(ReplayMismatch):
        replay_trace(start, forged)


def test_replay_detects_wrong_position():
    start = parse_path("sigma(sigma(p[a,b]))")
    forged = [RewriteStep("ss", (3,), start, parse_path("p[a,b]"))]
    with pytest.raises(ReplayMismatch):
        replay_trace(start, forged)


def test_trace_keeps_edits_and_builds_steps_on_demand():
    start = parse_path("sigma(tau(tau(p[a,b],q[b,c]),r[c,a]))")
    normal_form, trace = normalize(start)
    assert len(trace) == len(trace.edits) == len(trace.rules_used())
    steps = list(trace)
    assert steps[0].before == start
    assert steps[-1].after == normal_form
    for previous, step in zip(steps, steps[1:]):
        assert step.before == previous.after


def _single_steps(start, policy):
    current, taken = start, []
    while True:
        step = contract_once(current, policy)
        if step is None:
            return current, taken
        current, label, position = step
        taken.append((label, position, current))


@pytest.mark.parametrize("seed", range(25))
def test_innermost_normalize_matches_repeated_single_steps(seed):
    start = random_path(seed, 7, profile="full")
    normal_form, trace = normalize(start, policy=StrategyPolicy.innermost())
    expected_form, expected_steps = _single_steps(start, StrategyPolicy.innermost())
    assert normal_form == expected_form
    assert [(s.rule, s.position, s.after) for s in trace] == expected_steps


def test_outermost_normalize_matches_repeated_single_steps():
    start = parse_path("sigma(tau(sigma(sigma(p[a,b])),tau(q[b,c],sigma(q[b,c]))))")
    normal_form, trace = normalize(start, policy=StrategyPolicy.outermost())
    expected_form, expected_steps = _single_steps(start, StrategyPolicy.outermost())
    assert normal_form == expected_form
    assert [(s.rule, s.position, s.after) for s in trace] == expected_steps


def test_normalize_does_not_format_terms_at_info_level(monkeypatch, caplog):
    formatted = []
    original = paths.syntax.format_path

    def counting_format(p):
        formatted.append(p)
        return original(p)

    caplog.set_level(logging.INFO, logger="path_engine")
    start = parse_path("sigma(tau(tau(p[a,b],q[b,c]),sigma(tau(p[a,b],q[b,c]))))")
    monkeypatch.setattr(paths.syntax, "format_path", counting_format)
    normalize(start)
    normalize(start, policy=StrategyPolicy.outermost())
    assert formatted == []


def test_normalize_logs_each_step_at_debug_level(monkeypatch, caplog):
    monkeypatch.setattr(logging.getLogger("path_engine"), "propagate", True)
    caplog.set_level(logging.DEBUG, logger="path_engine")
    normalize(parse_path("sigma(sigma(p[a,b]))"))
    assert any("ss em []" in record.getMessage() for record in caplog.records)


def test_symmetry_of_congruence_closes_under_every_policy():
    start = parse_path("sigma(mu(xi2(q[c,a]),q[c,a]))")
    policies = [StrategyPolicy.innermost(), StrategyPolicy.outermost()]
    policies += [StrategyPolicy.seeded_random(seed) for seed in range(5)]
    for policy in policies:
        normal_form, _ = normalize(start, policy=policy)
        assert normal_form == parse_path("sigma(q[c,a])")
    after, label, _ = contract_once(start, StrategyPolicy.outermost())
    assert label == "smss"
    assert rw_equal(start, after)


def test_normal_forms_of_overlap():
    start = parse_path(OVERLAP)
    assert normal_forms(start) == {
        parse_path("subL(tau(p[a,b],q[b,c]),r[c,d])"),
        parse_path("tau(p[a,b],subL(q[b,c],r[c,d]))"),
    }
    for policy in (StrategyPolicy.innermost(), StrategyPolicy.outermost()):
        assert normalize(start, policy=policy)[0] in normal_forms(start)


def test_rw_equal_finds_common_normal_form_outside_groupoid():
    start = parse_path(OVERLAP)
    tt_first = parse_path("tau(p[a,b],tau(q[b,c],subL(rho[c],r[c,d])))")
    assert rw_equal(start, tt_first)
    assert rw_equal(tt_first, start)
    assert rw_equal(start, parse_path("tau(p[a,b],subL(q[b,c],r[c,d]))"))


def test_distinct_normal_forms_are_not_rw_equal():
    assert not rw_equal(
        parse_path("subL(tau(p[a,b],q[b,c]),r[c,d])"),
        parse_path("tau(p[a,b],subL(q[b,c],r[c,d]))"),
    )


def test_normal_form_search_is_bounded():
    with pytest.raises(StepLimitExceeded):
        normal_forms(parse_path(OVERLAP), limit=1)


@pytest.fixture
def random_default(monkeypatch):
    monkeypatch.setenv("PATHS_DEFAULT_POLICY", "random")
    get_settings.cache_clear()
    yield get_settings()
    get_settings.cache_clear()


def test_default_random_policy_uses_fuzz_seed(random_default):
    policy = default_policy()
    assert policy.name == "random"
    assert policy.seed == random_default.fuzz_seed


def test_default_random_policy_is_reproducible(random_default):
    start = parse_path("tau(sigma(tau(p[a,b],q[b,c])),tau(sigma(sigma(p[a,b])),sigma(sigma(q[b,c]))))")
    _, first = normalize(start)
    _, second = normalize(start)
    assert first.edits == second.edits

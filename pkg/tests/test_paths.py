import pytest

from lambdas.terms import parse_lambda
from models.errors import EndpointMismatch, IllFormed
from paths.terms import (
    Atom,
    Axiom,
    LambdaEndpoint,
    Rewr,
    Rho,
    Sigma,
    Tau,
    Var,
    ancestors,
    endpoints,
    generator,
    lambda_step,
    leaves as leaves_of,
    mu,
    nu,
    path_var,
    positions,
    positions_postorder,
    refl,
    replace_at,
    subterm_at,
    sub_l,
    symm,
    trans,
    xi,
)


def test_refl_has_equal_endpoints(points):
    a, _, _ = points
    path = refl(a)
    assert path.source == a and path.target == a
    assert endpoints(path) == (a, a)


def test_symm_swaps_endpoints(leaves, points):
    p, _, _ = leaves
    a, b, _ = points
    assert endpoints(symm(p)) == (b, a)


def test_trans_composes_end_to_end(leaves, points):
    p, q, _ = leaves
    a, _, c = points
    path = trans(p, q)
    assert (path.source, path.target) == (a, c)
    assert endpoints(path) == (a, c)


def test_trans_rejects_mismatched_endpoints(leaves):
    p, _, r = leaves
    with pytest.raises(EndpointMismatch):
        trans(p, r)


def test_subl_checks_endpoints_like_tau(leaves):
    p, q, _ = leaves
    assert sub_l(p, q).target == q.target
    with pytest.raises(EndpointMismatch):
        sub_l(q, p)


def test_xi_and_mu_require_parallel_arguments(leaves):
    p, q, r = leaves
    assert xi("xi", p, r).source == p.source
    assert mu("mu", p, r, p).target == p.target
    with pytest.raises(EndpointMismatch):
        xi("xiAnd", p, q)


@pytest.mark.parametrize("kind, count", [("xi1", 2), ("xiAnd", 1), ("mu", 4), ("mu2", 2)])
def test_former_arity_is_checked(leaves, kind, count):
    p, _, _ = leaves
    build = xi if kind.startswith("xi") else mu
    with pytest.raises(IllFormed):
        build(kind, *([p] * count))


def test_nu_is_endpoint_transparent(leaves):
    p, _, _ = leaves
    assert (nu(p).source, nu(p).target) == (p.source, p.target)


def test_lambda_step_labels_are_reserved(points):
    a, b, _ = points
    with pytest.raises(IllFormed):
        Axiom("beta", "loop", a, b)
    with pytest.raises(IllFormed):
        generator("eta", a, b)


def test_axiom_cannot_mix_atom_and_lambda_endpoints(points):
    a, _, _ = points
    with pytest.raises(IllFormed):
        Axiom("generator", "p", a, LambdaEndpoint(parse_lambda("x")))


def test_lambda_endpoints_compare_up_to_alpha():
    step = lambda_step("beta", parse_lambda("(\\x.x) y"), parse_lambda("y"))
    other = lambda_step("beta", parse_lambda("(\\z.z) y"), parse_lambda("y"))
    assert step == other
    assert hash(step) == hash(other)


def test_rewr_takes_body_endpoints(leaves):
    p, q, _ = leaves
    body = Tau(path_var("g", p), q)
    witness = Rewr(p, "g", body)
    assert (witness.source, witness.target) == (p.source, q.target)
    assert witness.free_path_vars == frozenset()


def test_rewr_rejects_variable_with_foreign_endpoints(leaves):
    p, q, _ = leaves
    stray = Var("g", q.source, q.target)
    with pytest.raises(EndpointMismatch):
        Rewr(p, "g", stray)


def test_equality_ignores_binder_names(leaves):
    p, _, _ = leaves
    first = Rewr(p, "g", Sigma(path_var("g", p)))
    second = Rewr(p, "h", Sigma(path_var("h", p)))
    assert first == second
    assert hash(first) == hash(second)
    assert first != Sigma(p)


def test_free_variables_are_compared_by_name(leaves):
    p, _, _ = leaves
    assert path_var("g", p) != path_var("h", p)
    assert path_var("g", p) == path_var("g", p)


def test_size_depth_and_leaves(leaves):
    p, q, _ = leaves
    path = Tau(Sigma(Sigma(p)), q)
    assert path.size == 5
    assert path.depth == 4
    assert list(leaves_of(path)) == [p, q]


def test_positions_orders(leaves):
    p, q, _ = leaves
    path = Tau(Sigma(Sigma(p)), q)
    assert list(positions(path)) == [(), (0,), (0, 0), (0, 0, 0), (1,)]
    assert list(positions_postorder(path)) == [(0, 0, 0), (0, 0), (0,), (1,), ()]


def test_subterm_and_replace(leaves):
    p, q, r = leaves
    path = Tau(p, q)
    assert subterm_at(path, (1,)) == q
    assert replace_at(path, (0,), r) == Tau(r, q)
    with pytest.raises(IndexError):
        subterm_at(path, (2,))


def test_replace_revalidates_endpoints(leaves, points):
    p, q, _ = leaves
    _, _, c = points
    with pytest.raises(EndpointMismatch):
        replace_at(Tau(p, q), (0,), Rho(c))


def test_ancestors_deepest_first():
    assert list(ancestors((0, 1, 0))) == [(0, 1), (0,), ()]


def test_rho_requires_endpoint():
    with pytest.raises(IllFormed):
        Rho("base")


def test_endpoints_agree_with_cached_values(leaves):
    p, q, r = leaves
    path = Tau(xi("xi", p, r), Sigma(Sigma(q)))
    assert endpoints(path) == (path.source, path.target)
    assert path.source == Atom("a")


@pytest.mark.parametrize(
    "build",
    [
        lambda p: Sigma(None),
        lambda p: Tau(p, "q"),
        lambda p: sub_l(None, p),
        lambda p: nu(None),
        lambda p: xi("xi", p, "r"),
        lambda p: mu("mu1", None),
        lambda p: Rewr(p, "g", None),
        lambda p: Rewr(None, "g", p),
    ],
)
def test_nodes_require_path_children(leaves, build):
    p, _, _ = leaves
    with pytest.raises(IllFormed):
        build(p)


def test_path_variable_requires_endpoints(points):
    a, b, _ = points
    assert Var("g", a, b).source == a
    with pytest.raises(IllFormed):
        Var("g", "a", b)
    with pytest.raises(IllFormed):
        Var("g", a, None)
    with pytest.raises(IllFormed):
        Var("", a, b)
    with pytest.raises(IllFormed):
        Var("g", a, LambdaEndpoint(parse_lambda("x")))

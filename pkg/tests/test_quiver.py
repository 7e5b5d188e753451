from fractions import Fraction

import pytest

from hochschild.quiver import (
    Path, PathSum, Quiver, RelationSyntaxError, compose, parse_relation,
    paths_up_to,
)


@pytest.fixture
def nakayama_quiver():
    # two vertices on a 2-cycle
    return Quiver(["0", "1"], [("alpha0", "0", "1"), ("alpha1", "1", "0")])


@pytest.fixture
def triangle_quiver():
    # 1 -> 2 -> 3 with a shortcut 1 -> 3 and a return arrow 3 -> 1
    return Quiver(
        ["1", "2", "3"],
        [("alpha", "1", "2"), ("beta", "2", "3"), ("gamma", "1", "3"),
         ("delta", "3", "1")],
    )


def test_trivial_path_is_unit(nakayama_quiver):
    q = nakayama_quiver
    p = q.arrow_path("alpha0")
    e = q.trivial_path("0")
    assert compose(e, p) == p
    assert compose(p, q.trivial_path("1")) == p


def test_compose_chain(triangle_quiver):
    ab = compose(triangle_quiver.arrow_path("alpha"),
                 triangle_quiver.arrow_path("beta"))
    assert ab == Path("1", "3", ("alpha", "beta"))


def test_compose_non_composable(triangle_quiver):
    assert compose(triangle_quiver.arrow_path("alpha"),
                   triangle_quiver.arrow_path("gamma")) is None


def test_compose_associative(triangle_quiver):
    q = triangle_quiver
    a, b, c = q.arrow_path("alpha"), q.arrow_path("beta"), q.arrow_path("delta")
    assert compose(compose(a, b), c) == compose(a, compose(b, c))


def test_paths_up_to_two_cycle(nakayama_quiver):
    ps = paths_up_to(nakayama_quiver, 2)
    labels = [p.label() for p in ps]
    assert labels == ["e_0", "e_1", "alpha0", "alpha1",
                      "alpha0*alpha1", "alpha1*alpha0"]


def test_paths_up_to_zero(nakayama_quiver):
    assert [p.label() for p in paths_up_to(nakayama_quiver, 0)] == ["e_0", "e_1"]


def test_paths_up_to_prefix_property(triangle_quiver):
    shorter = paths_up_to(triangle_quiver, 2)
    longer = paths_up_to(triangle_quiver, 3)
    assert longer[: len(shorter)] == shorter


def test_paths_up_to_contains_long_word(triangle_quiver):
    ps = paths_up_to(triangle_quiver, 3)
    assert Path("1", "3", ("gamma", "delta", "gamma")) in ps


def test_parse_single_word(triangle_quiver):
    ps = parse_relation("alpha*beta", triangle_quiver)
    assert ps.terms == {Path("1", "3", ("alpha", "beta")): Fraction(1)}


def test_parse_two_terms():
    q = Quiver(["0", "1"], [("a0", "0", "1"), ("abar0", "1", "0"),
                            ("a1", "1", "0"), ("abar1", "0", "1")])
    ps = parse_relation("a0*abar0 - abar1*a1", q)
    assert ps.terms == {
        Path("0", "0", ("a0", "abar0")): Fraction(1),
        Path("0", "0", ("abar1", "a1")): Fraction(-1),
    }


def test_parse_coefficients(triangle_quiver):
    ps = parse_relation("2*alpha*beta - 1/2*gamma*delta*gamma", triangle_quiver)
    assert ps.terms[Path("1", "3", ("alpha", "beta"))] == 2
    assert ps.terms[Path("1", "3", ("gamma", "delta", "gamma"))] == Fraction(-1, 2)


def test_parse_rejects_short_path(triangle_quiver):
    with pytest.raises(RelationSyntaxError):
        parse_relation("alpha", triangle_quiver)


def test_parse_rejects_non_parallel(triangle_quiver):
    with pytest.raises(RelationSyntaxError):
        parse_relation("alpha*beta - beta*delta", triangle_quiver)


def test_parse_rejects_unknown_arrow(triangle_quiver):
    with pytest.raises(RelationSyntaxError):
        parse_relation("alpha*zeta", triangle_quiver)


def test_parse_rejects_non_composable(triangle_quiver):
    with pytest.raises(RelationSyntaxError):
        parse_relation("alpha*gamma", triangle_quiver)


def test_path_sum_drops_zero_coefficients(triangle_quiver):
    ab = Path("1", "3", ("alpha", "beta"))
    ps = PathSum({ab: 1}) + PathSum({ab: -1})
    assert ps.is_zero()


def test_quiver_validation():
    with pytest.raises(ValueError):
        Quiver(["1", "1"], [])
    with pytest.raises(ValueError):
        Quiver(["1"], [("a", "1", "2")])
    with pytest.raises(ValueError):
        Quiver(["1"], [("a", "1", "1"), ("a", "1", "1")])


def test_acyclicity(triangle_quiver, nakayama_quiver):
    assert not triangle_quiver.is_acyclic()
    assert not nakayama_quiver.is_acyclic()
    assert Quiver(["1", "2"], [("a", "1", "2")]).is_acyclic()

import pytest

from liftkit.errors import ExpressionSyntaxError, NotLyndonInBrackets
from liftkit.grammar import parse, parse_element, parse_scalar
from liftkit.scalars import ParamScalar, zeta
from liftkit.smash import q_commutator, random_homogeneous

z = zeta(12)


def _random_element(alg, rng):
    out = alg.zero()
    for _ in range(rng.randint(1, 3)):
        deg = (rng.randint(0, 3), rng.randint(0, 3))
        if deg == (0, 0):
            deg = (1, 0)
        g = alg.g((rng.randint(-2, 2), rng.randint(-2, 2)))
        out = out + random_homogeneous(alg, deg, rng, terms=2) * g
    return out


def test_round_trip_500(generic, rng):
    for _ in range(500):
        a = _random_element(generic, rng)
        assert parse_element(a.to_str(), generic) == a


def test_brackets_are_q_commutators(generic):
    x1, x2 = generic.x(1), generic.x(2)
    assert parse_element("[x1 x2]", generic) == q_commutator(x1, x2)
    inner = q_commutator(x1, x2)
    assert parse_element("[x1 x1 x2]", generic) == q_commutator(x1, inner)
    assert parse_element("[x1x2]^2", generic) == inner * inner


def test_group_conjugation(generic):
    q11 = ParamScalar.param("q11")
    assert parse_element("g1 x1 g1^-1", generic) == generic.x(1).scale(q11)


def test_scalars():
    assert parse_scalar("z^3 + 1") == z ** 3 + 1
    assert parse_scalar("(1 - z)^2") == (1 - z) * (1 - z)
    assert parse_scalar("z^12") == 1


@pytest.mark.parametrize(
    "src, pos",
    [("x1 +", 4), ("(2", 2), ("[x1 x2", 6), ("x1 ^", 4), ("3 $", 2)],
)
def test_syntax_errors_report_position(src, pos):
    with pytest.raises(ExpressionSyntaxError) as info:
        parse(src)
    assert info.value.position == pos


def test_bracket_must_be_lyndon(generic):
    with pytest.raises(NotLyndonInBrackets):
        parse_element("[x2 x1]", generic)


def test_index_out_of_range(generic):
    with pytest.raises(ExpressionSyntaxError):
        parse_element("x3", generic)


def test_free_symbols_become_parameters(generic):
    a = parse_element("lambda12 x1", generic)
    assert a == generic.x(1).scale(ParamScalar.param("lambda12"))

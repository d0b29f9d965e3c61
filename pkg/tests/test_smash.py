import pytest

from liftkit.braiding import BraidingMatrix
from liftkit.errors import InvalidRealization, NotHomogeneous
from liftkit.scalars import CycloNumber, ParamScalar, zeta
from liftkit.smash import (
    GroupRealization,
    SmashAlgebra,
    commutator_identities,
    multidegree,
    q_commutator,
    q_leibniz,
    random_homogeneous,
)

P = ParamScalar.param
z = zeta(12)


def _mixed(alg, rng):
    g = alg.g((rng.randint(-2, 2), rng.randint(-2, 2)))
    return random_homogeneous(alg, (rng.randint(0, 2), rng.randint(1, 2)), rng, terms=2) * g


def test_product_is_associative(generic, rng):
    for _ in range(50):
        a, b, c = (_mixed(generic, rng) for _ in range(3))
        assert (a * b) * c == a * (b * c)


def test_group_acts_by_characters(generic):
    g1, g2 = generic.g((1, 0)), generic.g((0, 1))
    x1, x2 = generic.x(1), generic.x(2)
    assert g1 * x2 == (x2 * g1).scale(P("q12"))
    assert g2 * x1 == (x1 * g2).scale(P("q21"))
    assert g1 * generic.g((-1, 0)) == generic.one()


def test_commutator_of_letters(generic):
    x1, x2 = generic.x(1), generic.x(2)
    assert q_commutator(x1, x2) == x1 * x2 - (x2 * x1).scale(P("q12"))
    assert q_commutator(x1, x1).is_zero() is False
    assert q_commutator(x1, x1) == (x1 * x1).scale(1 - P("q11"))


def test_super_letters_nest_by_shirshov(generic):
    x1 = generic.x(1)
    assert generic.super_letter((1, 1, 2)) == q_commutator(x1, generic.super_letter((1, 2)))
    assert generic.super_letter((1, 2, 2)) == q_commutator(generic.super_letter((1, 2)), generic.x(2))


def test_identities_on_random_elements(generic, rng):
    for _ in range(30):
        a, b, c = (random_homogeneous(generic, (rng.randint(0, 2), rng.randint(1, 2)), rng) for _ in range(3))
        assert all(commutator_identities(a, b, c).values())
        assert q_leibniz(a, b, 2) == (True, True)


def test_multidegree(generic):
    assert multidegree(generic.super_letter((1, 1, 2))) == (2, 1)
    mixed = generic.x(1) + generic.x(2)
    assert multidegree(mixed) is None
    with pytest.raises(NotHomogeneous):
        q_commutator(mixed, generic.x(1))


def test_random_homogeneous_refuses_degree_zero(generic, rng):
    with pytest.raises(ValueError):
        random_homogeneous(generic, (0, 0), rng)


def _numeric():
    return BraidingMatrix([[z ** 4, z], [z ** -5, -CycloNumber.rational(1)]])


def test_cyclic_realization_reduces_group():
    q = _numeric()
    real = GroupRealization.cyclic_product(q, (12, 12))
    alg = SmashAlgebra(q, realization=real, order=12)
    assert real.order == 144
    assert alg.g((12, 0)) == alg.one()
    assert alg.g((13, -12)) == alg.g((1, 0))


def test_realization_must_match_braiding():
    q = _numeric()
    with pytest.raises(InvalidRealization):
        GroupRealization([12, 12], [[1, 0], [0, 1]], [[z ** 4, z], [z, -1]], q=q)
    with pytest.raises(InvalidRealization):
        GroupRealization([3], [[1], [1]], [[z], [z]])

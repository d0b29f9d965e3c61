import pytest

from liftkit.braiding import BraidingMatrix
from liftkit.hopf import (
    TensorElement,
    coproduct,
    is_skew_primitive,
    is_skew_primitive_mod,
    serre_vector_primitive,
    seven_term_expansion,
    skew_defect,
)
from liftkit.pbw import Relation, RewriteSystem
from liftkit.scalars import CycloNumber, ParamScalar, zeta
from liftkit.smash import SmashAlgebra, random_homogeneous

P = ParamScalar.param
z = zeta(12)
ONE = CycloNumber.rational(1)


def test_letters_are_skew_primitive(generic):
    x1 = generic.x(1)
    assert coproduct(x1) == TensorElement.pure(x1, generic.one()) + TensorElement.pure(generic.g((1, 0)), x1)
    assert is_skew_primitive(x1, generic.group((1, 0)))


def test_coproduct_is_multiplicative(generic, rng):
    for _ in range(20):
        a = random_homogeneous(generic, (rng.randint(0, 2), rng.randint(1, 2)), rng, terms=2)
        b = random_homogeneous(generic, (rng.randint(1, 2), rng.randint(0, 1)), rng, terms=2)
        g = generic.g((rng.randint(-1, 1), rng.randint(-1, 1)))
        assert coproduct(a * g * b) == coproduct(a) * coproduct(g) * coproduct(b)


def test_group_likes(generic):
    g = generic.g((2, -1))
    assert coproduct(g) == TensorElement.pure(g, g)


def test_bracket_of_letters_defect(generic):
    u = generic.super_letter((1, 2))
    d = skew_defect(u, generic.group((1, 1)))
    x1, x2 = generic.x(1), generic.x(2)
    expected = TensorElement.pure(x1 * generic.g((0, 1)), x2).scale(1 - P("q12") * P("q21"))
    assert d == expected


def test_seven_term_expansion_is_the_coproduct(generic):
    assert seven_term_expansion(generic) == coproduct(generic.super_letter((1, 1, 2, 1, 2)))


def _cartan_a2(mixed):
    return SmashAlgebra(BraidingMatrix([[z ** 4, ONE], [mixed, z ** 4]]), order=12)


def test_serre_vectors():
    good = _cartan_a2(z ** -4)
    assert serre_vector_primitive(good, 1, 2, 2) == (True, True)
    assert serre_vector_primitive(good, 1, 2, 2, side="right") == (True, True)
    assert serre_vector_primitive(good, 1, 2, 3, side="power") == (True, True)
    bad = _cartan_a2(z)
    assert serre_vector_primitive(bad, 1, 2, 2) == (False, False)


def test_primitivity_modulo_relations():
    alg = SmashAlgebra(BraidingMatrix([[-ONE, z], [z ** 5, -ONE]]), order=12)
    sys = RewriteSystem(alg, [
        Relation.from_generator(((1,), (1,)), alg.x(1) ** 2),
        Relation.from_generator(((2,), (2,)), alg.x(2) ** 2),
    ])
    # q12 q21 = -1, so [x1x2]^2 is primitive only modulo x1^2 and x2^2
    target = alg.super_letter((1, 2)) ** 2
    assert not is_skew_primitive(target, alg.group((2, 2)))
    cert = is_skew_primitive_mod("[x1x2]^2", alg.group((2, 2)), sys)
    assert cert.certified
    broken = is_skew_primitive_mod("[x1x2]^2 + x1", alg.group((2, 2)), sys)
    assert not broken.certified

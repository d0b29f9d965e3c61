import pytest

from liftkit.braiding import BraidingMatrix
from liftkit.errors import InfiniteDimension
from liftkit.pbw import (
    Relation,
    RewriteSystem,
    check_local_confluence,
    enumerate_pbw_basis,
    reduce,
    span_dimension_oracle,
)
from liftkit.scalars import CycloNumber, zeta
from liftkit.smash import SmashAlgebra

z = zeta(12)
ONE = CycloNumber.rational(1)


def _quantum_plane(n):
    """x2 x1 = q21 x1 x2 with q12 q21 = 1 and ord q11 = ord q22 = n."""
    w = CycloNumber.root(n)
    q = BraidingMatrix([[w, z], [z ** -1, w]])
    alg = SmashAlgebra(q, order=12)
    rels = [
        Relation.from_generator(((1, 2),), alg.super_letter((1, 2))),
        Relation.from_generator(((1,),) * n, alg.x(1) ** n),
        Relation.from_generator(((2,),) * n, alg.x(2) ** n),
    ]
    return alg, RewriteSystem(alg, rels)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_quantum_plane_dimension(n):
    alg, sys = _quantum_plane(n)
    assert enumerate_pbw_basis(sys).free_dimension == n * n
    assert sum(span_dimension_oracle([r.element() for r in sys.relations], alg.q, 3 * n)) == n * n


def test_confluent():
    _, sys = _quantum_plane(3)
    report = check_local_confluence(sys, 8)
    assert report.confluent and not report.failures()


def test_reduction_uses_commutation():
    alg, sys = _quantum_plane(3)
    x1, x2 = alg.x(1), alg.x(2)
    assert reduce(x2 * x1, sys) == reduce((x1 * x2).scale(z ** -1), sys)
    assert reduce(x1 ** 3 * x2, sys).is_zero()


def test_missing_truncation_is_infinite():
    q = BraidingMatrix([[-ONE, z], [-z ** -1, -ONE]])
    alg = SmashAlgebra(q, order=12)
    sys = RewriteSystem(alg, [
        Relation.from_generator(((1,), (1,)), alg.x(1) ** 2),
        Relation.from_generator(((2,), (2,)), alg.x(2) ** 2),
    ])
    with pytest.raises(InfiniteDimension):
        enumerate_pbw_basis(sys, bound=30)

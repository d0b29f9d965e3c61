import pytest

from liftkit.braiding import (
    BraidingMatrix,
    bicharacter,
    cartan_matrix,
    dynkin,
    reflect,
    twist_equivalent,
    weyl_orbit,
    word_degree,
)
from liftkit.errors import NotFiniteOrder
from liftkit.scalars import CycloNumber, multiplicative_order, zeta

z = zeta(12)
ONE = CycloNumber.rational(1)


def _cartan_oracle(q):
    """a_ij = -min{m : (m+1)_{q_ii} (1 - q_ii^m q_ij q_ji) = 0} by direct search."""
    n = q.theta
    a = [[2] * n for _ in range(n)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            qii, mixed = q[i, i], q[i, j] * q[j, i]
            m = 0
            while True:
                qnum = sum((qii ** k for k in range(m + 1)), CycloNumber.rational(0))
                if qnum.is_zero() or (ONE - qii ** m * mixed).is_zero():
                    break
                m += 1
            a[i - 1][j - 1] = -m
    return tuple(map(tuple, a))


def _random_braiding(rng):
    e = [rng.randrange(1, 12), rng.randrange(12), rng.randrange(12), rng.randrange(1, 12)]
    return BraidingMatrix([[z ** e[0], z ** e[1]], [z ** e[2], z ** e[3]]])


def test_cartan_matches_search(rng):
    for _ in range(200):
        q = _random_braiding(rng)
        assert cartan_matrix(q) == _cartan_oracle(q)


def test_reflection_is_involution(rng):
    done = 0
    while done < 100:
        q = _random_braiding(rng)
        try:
            once = [reflect(q, k) for k in (1, 2)]
            cartan_matrix(once[0]), cartan_matrix(once[1])
        except NotFiniteOrder:
            continue
        done += 1
        for k in (1, 2):
            back = reflect(once[k - 1], k)
            assert all(back[i, j] == q[i, j] for i in (1, 2) for j in (1, 2))


def test_reflection_of_a2_example():
    q = BraidingMatrix([[z ** 4, ONE], [z ** -4, -ONE]])
    r = reflect(q, 2)
    assert r[2, 2] == q[2, 2]
    assert r[1, 1] == -ONE
    assert r[1, 2] * r[2, 1] == z ** 4


def test_bicharacter_is_multiplicative(rng):
    q = _random_braiding(rng)
    a, b, c = (1, 2), (0, 3), (2, 1)
    ab = (a[0] + b[0], a[1] + b[1])
    assert bicharacter(q, ab, c) == bicharacter(q, a, c) * bicharacter(q, b, c)
    assert bicharacter(q, (1, 0), (0, 1)) == q[1, 2]
    assert word_degree((1, 1, 2), 2) == (2, 1)


def test_twist_equivalence():
    q = BraidingMatrix([[z ** 4, z], [z ** 3, -ONE]])
    same = BraidingMatrix([[z ** 4, z ** 2], [z ** 2, -ONE]])
    other = BraidingMatrix([[z ** 4, z ** 2], [z ** 3, -ONE]])
    assert twist_equivalent(q, same)
    assert not twist_equivalent(q, other)
    assert dynkin(q) == dynkin(same)


def test_weyl_orbit_finite_for_a2():
    q = BraidingMatrix([[z ** 4, ONE], [z ** -4, -ONE]])
    orbit = weyl_orbit(q)
    assert dynkin(q) in orbit
    assert dynkin(reflect(q, 1)) in orbit and dynkin(reflect(q, 2)) in orbit
    assert len(orbit) <= 6


def test_root_order():
    q = BraidingMatrix([[z ** 4, ONE], [z ** -4, -ONE]])
    assert multiplicative_order(q[1, 1]) == 3


@pytest.mark.parametrize("k", [0, 3])
def test_reflect_rejects_bad_vertex(k):
    q = BraidingMatrix([[z ** 4, ONE], [z ** -4, -ONE]])
    with pytest.raises(ValueError):
        reflect(q, k)

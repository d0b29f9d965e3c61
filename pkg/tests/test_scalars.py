import cmath
import itertools
from fractions import Fraction

import pytest

from liftkit.errors import InversionOfNonUnit
from liftkit.scalars import (
    CycloNumber,
    ParamScalar,
    instantiate,
    multiplicative_order,
    q_binomial,
    q_factorial,
    q_number,
    zeta,
)

P = ParamScalar.param
z = zeta(12)


def to_complex(x):
    """Numerical value through the coefficient vector (used as an independent oracle)."""
    n = x.order
    w = cmath.exp(2j * cmath.pi / n)
    return sum(complex(c) * w ** k for k, c in enumerate(x.coeffs))


def test_root_relations():
    assert z ** 12 == CycloNumber.rational(1)
    assert z ** 6 == CycloNumber.rational(-1)
    assert z ** 3 * z ** 3 == CycloNumber.rational(-1)
    assert z ** 4 + z ** 8 + 1 == CycloNumber.rational(0)


@pytest.mark.parametrize("k", range(12))
def test_order_of_powers(k):
    from math import gcd

    assert multiplicative_order(z ** k) == 12 // gcd(k, 12)


def _random_cyclo(rng):
    x = CycloNumber.rational(0)
    for _ in range(3):
        x = x + z ** rng.randrange(12) * CycloNumber.rational(Fraction(rng.randint(-3, 3), rng.randint(1, 3)))
    return x


def test_field_arithmetic_matches_complex(rng):
    for _ in range(200):
        a, b = _random_cyclo(rng), _random_cyclo(rng)
        assert abs(to_complex(a * b) - to_complex(a) * to_complex(b)) < 1e-9
        assert abs(to_complex(a + b) - to_complex(a) - to_complex(b)) < 1e-9
        if not b.is_zero():
            assert b * b.inverse() == CycloNumber.rational(1)


def test_mixed_orders_embed():
    w8, w3 = zeta(8), zeta(3)
    prod = w8 * w3
    assert multiplicative_order(prod) == 24
    assert abs(to_complex(prod) - cmath.exp(2j * cmath.pi * (1 / 8 + 1 / 3))) < 1e-9


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        CycloNumber.rational(0).inverse()


def test_param_polynomials():
    a, b = P("a", invertible=True), P("b", invertible=True)
    assert (a + b) ** 2 == a * a + a * b * 2 + b * b
    assert (a * b).inverse() == a.inverse() * b.inverse()
    assert (a + 1) ** 0 == ParamScalar.const(1)
    with pytest.raises(InversionOfNonUnit):
        (a + 1).inverse()
    assert instantiate((a + 1) ** 2, {"a": z}) == (z + 1) * (z + 1)
    assert ((a + b) ** 3).subs({"b": -a}).is_zero()


def _brute_q_binomial(n, i, q):
    """Sum of q^(inversions) over 0/1 words with i ones."""
    total = ParamScalar.const(0)
    for word in itertools.product((0, 1), repeat=n):
        if sum(word) != i:
            continue
        inv = sum(1 for s, t in itertools.combinations(range(n), 2) if word[s] > word[t])
        total = total + q ** inv
    return total


@pytest.mark.parametrize("n", range(0, 8))
def test_q_binomial_counts_inversions(n):
    q = P("q")
    for i in range(n + 1):
        assert q_binomial(n, i, q) == _brute_q_binomial(n, i, q)


def test_q_numbers_and_factorials():
    q = P("q")
    assert q_number(4, q) == 1 + q + q ** 2 + q ** 3
    assert q_factorial(3, q) == q_number(1, q) * q_number(2, q) * q_number(3, q)
    assert q_number(3, z ** 4).is_zero()
    assert q_binomial(6, 2, CycloNumber.rational(1)) == CycloNumber.rational(15)


def test_q_binomial_vanishes_exactly_at_order():
    for n in range(2, 9):
        for m in range(1, 25):
            for k in range(1, m + 1):
                w = CycloNumber.root(m, k)
                if multiplicative_order(w) != m:
                    continue
                all_zero = all(q_binomial(n, i, w).is_zero() for i in range(1, n))
                assert all_zero == (m == n)


def test_formatting():
    assert z.to_str(12) == "z"
    assert (P("a") + 1).to_str() == "1 + a"

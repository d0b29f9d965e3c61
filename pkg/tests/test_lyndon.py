import itertools

import pytest

from liftkit.errors import EmptyWord, TooShort
from liftkit.lyndon import (
    format_word,
    is_lyndon,
    is_shirshov_closed,
    lyndon_factorization,
    lyndon_words,
    parse_word,
    shirshov_closure,
    shirshov_decompose,
)


def _lyndon_oracle(w):
    """Strictly smaller than every proper rotation."""
    return all(w < w[k:] + w[:k] for k in range(1, len(w)))


def _witt(theta, n):
    from math import gcd

    def mobius(m):
        out, p, x = 1, 2, m
        while p * p <= x:
            if x % p == 0:
                x //= p
                if x % p == 0:
                    return 0
                out = -out
            p += 1
        return -out if x > 1 else out

    return sum(mobius(d) * theta ** (n // d) for d in range(1, n + 1) if n % d == 0) // n


@pytest.mark.parametrize("theta", [2, 3])
def test_lyndon_words_match_rotation_oracle(theta):
    for n in range(1, 8 if theta == 2 else 6):
        words = [w for w in itertools.product(range(1, theta + 1), repeat=n)]
        expected = {w for w in words if _lyndon_oracle(w)}
        assert {w for w in words if is_lyndon(w)} == expected
        assert len(expected) == _witt(theta, n)


def test_enumeration_counts():
    words = lyndon_words(2, 8)
    assert len(words) == sum(_witt(2, n) for n in range(1, 9))
    assert len(set(words)) == len(words)


def test_shirshov_decomposition():
    for w in lyndon_words(2, 8):
        if len(w) < 2:
            continue
        u, v = shirshov_decompose(w)
        assert u + v == w
        assert is_lyndon(u) and is_lyndon(v)
        # v is the longest proper Lyndon suffix
        longer = [w[k:] for k in range(1, len(u)) if is_lyndon(w[k:])]
        assert not longer


def test_factorization_is_nonincreasing():
    for w in itertools.product((1, 2), repeat=7):
        parts = lyndon_factorization(w)
        assert sum(parts, ()) == w
        assert all(is_lyndon(p) for p in parts)
        assert all(a >= b for a, b in zip(parts, parts[1:]))


def test_shirshov_closure():
    closed = shirshov_closure([(1, 1, 2)])
    assert closed == {(1,), (2,), (1, 2), (1, 1, 2)}
    assert is_shirshov_closed(closed)
    assert not is_shirshov_closed([(1, 1, 2)])


def test_word_text_round_trip():
    for w in lyndon_words(3, 5):
        assert parse_word(format_word(w)) == w


def test_errors():
    with pytest.raises(EmptyWord):
        is_lyndon(())
    with pytest.raises(TooShort):
        shirshov_decompose((1,))

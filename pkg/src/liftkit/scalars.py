"""Exact coefficients: cyclotomic numbers and Laurent polynomials over them.

``CycloNumber`` is an element of Q(zeta_n) stored as an integer vector over
the power basis 1, z, ..., z^(phi(n)-1) plus one positive common denominator.
``ParamScalar`` is a Laurent polynomial in named parameters whose
coefficients are CycloNumbers.  Parameters whose names are flagged
invertible (the braiding entries) may carry negative exponents; plain ones
(deformation parameters) never do.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import (
    IndexOutOfRange,
    InversionOfNonUnit,
    MissingParameter,
    ZeroForInvertible,
    ZeroInput,
)

__all__ = [
    "CycloNumber",
    "ParamScalar",
    "zeta",
    "as_scalar",
    "q_number",
    "q_factorial",
    "q_binomial",
    "q_number_factorial_binomial",
    "multiplicative_order",
    "instantiate",
    "is_zero",
]


# ---------------------------------------------------------------------------
# cyclotomic tables


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


@lru_cache(maxsize=None)
def _cyclotomic(n):
    """Coefficients (low to high) of the n-th cyclotomic polynomial."""
    num = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in _divisors(n)[:-1]:
        num = _polydiv_exact(num, _cyclotomic(d))
    return tuple(num)


def _polydiv_exact(a, b):
    a = list(a)
    out = [0] * (len(a) - len(b) + 1)
    lead = b[-1]
    for k in range(len(out) - 1, -1, -1):
        c = a[k + len(b) - 1] // lead
        out[k] = c
        if c:
            for j, bj in enumerate(b):
                a[k + j] -= c * bj
    assert not any(a), "inexact cyclotomic division"
    return out


@lru_cache(maxsize=None)
def _phi(n):
    return len(_cyclotomic(n)) - 1


@lru_cache(maxsize=None)
def _power_table(n):
    """Row m holds the basis coordinates of zeta_n^m for 0 <= m < n."""
    phi = _phi(n)
    cyc = _cyclotomic(n)
    rows = []
    cur = [0] * phi
    cur[0] = 1
    for _ in range(n):
        rows.append(tuple(cur))
        # multiply by z
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for j in range(phi):
                cur[j] -= top * cyc[j]
    return tuple(rows)


def _embed_vec(num, n, m):
    """Coordinates of an order-n vector inside Q(zeta_m), n | m."""
    if n == m:
        return num
    step = m // n
    table = _power_table(m)
    out = [0] * _phi(m)
    for j, c in enumerate(num):
        if c:
            row = table[(j * step) % m]
            for k, r in enumerate(row):
                if r:
                    out[k] += c * r
    return tuple(out)


def _lcm(a, b):
    return a // gcd(a, b) * b


# ---------------------------------------------------------------------------
# CycloNumber


class CycloNumber:
    """Exact element of Q(zeta_order)."""

    __slots__ = ("order", "num", "den", "_low")

    def __init__(self, order, num, den=1, _normalized=False):
        self.order = order
        if _normalized:
            self.num = num
            self.den = den
        else:
            num = tuple(num)
            if len(num) != _phi(order):
                raise ValueError("coefficient vector has wrong length")
            if den < 0:
                num = tuple(-c for c in num)
                den = -den
            if den == 0:
                raise ZeroDivisionError("zero denominator")
            g = den
            for c in num:
                g = gcd(g, c)
                if g == 1:
                    break
            if g > 1:
                num = tuple(c // g for c in num)
                den //= g
            if not any(num):
                den = 1
            self.num = num
            self.den = den
        self._low = None

    # construction -------------------------------------------------------
    @classmethod
    def rational(cls, value, order=1):
        value = Fraction(value)
        num = [0] * _phi(order)
        num[0] = value.numerator
        return cls(order, num, value.denominator)

    @classmethod
    def root(cls, order, k=1):
        """zeta_order ** k."""
        return cls(order, _power_table(order)[k % order], 1, _normalized=True)

    @property
    def coeffs(self):
        return tuple(Fraction(c, self.den) for c in self.num)

    # helpers --------------------------------------------------------------
    def _lift(self, m):
        if m == self.order:
            return self.num
        return _embed_vec(self.num, self.order, m)

    def _coerce(self, other):
        if isinstance(other, CycloNumber):
            return other
        if isinstance(other, (int, Fraction)):
            return CycloNumber.rational(other, self.order)
        return None

    def is_zero(self):
        return not any(self.num)

    def __bool__(self):
        return any(self.num)

    def is_rational(self):
        return not any(self.num[1:])

    def to_fraction(self):
        if not self.is_rational():
            raise ValueError("not a rational number")
        return Fraction(self.num[0], self.den)

    # arithmetic -----------------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        m = self.order if o.order == self.order else _lcm(self.order, o.order)
        a, b = self._lift(m), o._lift(m)
        da, db = self.den, o.den
        if da == db:
            return CycloNumber(m, [x + y for x, y in zip(a, b)], da)
        return CycloNumber(m, [x * db + y * da for x, y in zip(a, b)], da * db)

    __radd__ = __add__

    def __neg__(self):
        return CycloNumber(self.order, tuple(-c for c in self.num), self.den, _normalized=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return CycloNumber(self.order, [c * other for c in self.num], self.den)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        m = self.order if o.order == self.order else _lcm(self.order, o.order)
        a, b = self._lift(m), o._lift(m)
        phi = len(a)
        if phi == 1:
            return CycloNumber(m, (a[0] * b[0],), self.den * o.den)
        conv = [0] * (2 * phi - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        out = conv[:phi]
        table = _power_table(m)
        for k in range(phi, 2 * phi - 1):
            c = conv[k]
            if c:
                row = table[k % m]
                for j, r in enumerate(row):
                    if r:
                        out[j] += c * r
        return CycloNumber(m, out, self.den * o.den)

    __rmul__ = __mul__

    def conjugate_by(self, k):
        """Galois image under zeta -> zeta^k (gcd(k, order) = 1)."""
        n = self.order
        table = _power_table(n)
        out = [0] * len(self.num)
        for j, c in enumerate(self.num):
            if c:
                for t, r in enumerate(table[(j * k) % n]):
                    if r:
                        out[t] += c * r
        return CycloNumber(n, out, self.den)

    def inverse(self):
        if self.is_zero():
            raise InversionOfNonUnit("zero has no inverse")
        n = self.order
        # product of the other Galois conjugates is the adjugate
        adj = CycloNumber.rational(1, n)
        for k in range(2, n + 1):
            if gcd(k, n) == 1 and k % n != 1:
                adj = adj * self.conjugate_by(k)
        norm = (self * adj).to_fraction()
        return adj._scale(1 / norm)

    def _scale(self, frac):
        frac = Fraction(frac)
        return CycloNumber(
            self.order,
            [c * frac.numerator for c in self.num],
            self.den * frac.denominator,
        )

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_rational():
            f = o.to_fraction()
            if f == 0:
                raise InversionOfNonUnit("division by zero")
            return self._scale(1 / f)
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        base = self
        if e < 0:
            base = self.inverse()
            e = -e
        result = CycloNumber.rational(1, self.order)
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # comparison -----------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, ParamScalar):
            return other == self
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.den != self.den:
            return False
        if o.order == self.order:
            return o.num == self.num
        m = _lcm(self.order, o.order)
        return self._lift(m) == o._lift(m)

    def lowest(self):
        """Same number expressed in the smallest cyclotomic field containing it."""
        if self._low is not None:
            return self._low
        n = self.order
        result = self
        for d in _divisors(n):
            if d == n:
                break
            sol = _solve_in_subfield(self.num, n, d)
            if sol is not None:
                ints, den = sol
                result = CycloNumber(d, ints, self.den * den)
                break
        self._low = result
        return result

    def __hash__(self):
        low = self.lowest()
        return hash((low.order, low.num, low.den))

    def sort_key(self):
        low = self.lowest()
        return (low.order, low.num, low.den)

    def embed(self, m):
        if m % self.order:
            raise ValueError(f"Q(zeta_{self.order}) does not embed in Q(zeta_{m})")
        return CycloNumber(m, self._lift(m), self.den, _normalized=True)

    # printing -------------------------------------------------------------
    def to_str(self, order=None):
        """Canonical text over the power basis of ``z = zeta_order``."""
        if order is None:
            order = self.order
        if order % self.order:
            low = self.lowest()
            if order % low.order:
                raise ValueError(f"number of order {self.order} not expressible with z of order {order}")
            return low.to_str(order)
        vec = self._lift(order)
        parts = []
        for k, c in enumerate(vec):
            if not c:
                continue
            f = Fraction(c, self.den)
            sign = "-" if f < 0 else "+"
            a = abs(f)
            if k == 0:
                body = str(a)
            else:
                zk = "z" if k == 1 else f"z^{k}"
                body = zk if a == 1 else f"{a} {zk}"
            parts.append((sign, body))
        if not parts:
            return "0"
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"CycloNumber({self.order}, {self.to_str()!r})"


def _solve_in_subfield(num, n, d):
    """Coordinates over Q(zeta_d) of a vector of Q(zeta_n), or None."""
    phi_d = _phi(d)
    step = n // d
    table = _power_table(n)
    cols = [table[(i * step) % n] for i in range(phi_d)]
    rows = len(num)
    # augmented matrix rows: coordinate k, unknowns b_i
    mat = [[Fraction(cols[i][k]) for i in range(phi_d)] + [Fraction(num[k])] for k in range(rows)]
    piv_cols = []
    r = 0
    for c in range(phi_d):
        p = next((i for i in range(r, rows) if mat[i][c]), None)
        if p is None:
            continue
        mat[r], mat[p] = mat[p], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(rows):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        piv_cols.append(c)
        r += 1
    for i in range(r, rows):
        if mat[i][-1]:
            return None
    sol = [Fraction(0)] * phi_d
    for i, c in enumerate(piv_cols):
        sol[c] = mat[i][-1]
    den = 1
    for s in sol:
        den = den * s.denominator // gcd(den, s.denominator)
    return [int(s * den) for s in sol], den


def zeta(order, k=1):
    """zeta_order ** k as a CycloNumber."""
    return CycloNumber.root(order, k)


def is_zero(x):
    if isinstance(x, (CycloNumber, ParamScalar)):
        return x.is_zero()
    return x == 0


def multiplicative_order(x):
    """Least m >= 1 with x^m = 1, or None when x is not a root of unity."""
    if isinstance(x, ParamScalar):
        if not x.is_constant():
            raise ValueError("order of a non-constant scalar")
        x = x.constant()
    if isinstance(x, (int, Fraction)):
        x = CycloNumber.rational(x)
    if x.is_zero():
        raise ZeroInput("multiplicative order of zero")
    n = x.order
    bound = n if n % 2 == 0 else 2 * n
    one = CycloNumber.rational(1)
    if x ** bound != one:
        return None
    for m in _divisors(bound):
        if x ** m == one:
            return m
    return bound  # unreachable


# ---------------------------------------------------------------------------
# ParamScalar


def _mono_mul(a, b):
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for name, e in b:
        e2 = d.get(name, 0) + e
        if e2:
            d[name] = e2
        else:
            del d[name]
    return tuple(sorted(d.items()))


class ParamScalar:
    """Laurent polynomial in named parameters over cyclotomic coefficients.

    ``terms`` maps a monomial (sorted tuple of ``(name, exponent)``) to a
    nonzero CycloNumber.  ``invertible`` holds the names allowed to carry
    negative exponents.
    """

    __slots__ = ("terms", "invertible", "_hash")

    def __init__(self, terms=None, invertible=frozenset()):
        clean = {}
        if terms:
            for mono, c in terms.items():
                if not isinstance(c, CycloNumber):
                    c = CycloNumber.rational(c)
                if not c.is_zero():
                    clean[mono] = c
        self.terms = clean
        self.invertible = frozenset(invertible)
        self._hash = None

    # construction -------------------------------------------------------
    @classmethod
    def const(cls, c):
        if isinstance(c, ParamScalar):
            return c
        if not isinstance(c, CycloNumber):
            c = CycloNumber.rational(c)
        return cls({(): c})

    @classmethod
    def param(cls, name, invertible=None):
        if invertible is None:
            invertible = name.startswith("q")
        return cls({((name, 1),): CycloNumber.rational(1)}, {name} if invertible else ())

    @classmethod
    def _raw(cls, terms, invertible):
        obj = cls.__new__(cls)
        obj.terms = terms
        obj.invertible = invertible
        obj._hash = None
        return obj

    # queries --------------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and () in self.terms)

    def constant(self):
        """The CycloNumber value of a constant scalar."""
        if not self.terms:
            return CycloNumber.rational(0)
        if not self.is_constant():
            raise ValueError("scalar depends on parameters")
        return self.terms[()]

    def constant_term(self):
        return self.terms.get((), CycloNumber.rational(0))

    def params(self):
        out = set()
        for mono in self.terms:
            for name, _ in mono:
                out.add(name)
        return out

    def is_unit(self):
        if len(self.terms) != 1:
            return False
        ((mono, c),) = self.terms.items()
        return all(name in self.invertible for name, _ in mono)

    def degree_in(self, name):
        return max((dict(m).get(name, 0) for m in self.terms), default=0)

    # arithmetic -----------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, ParamScalar):
            return other
        if isinstance(other, (CycloNumber, int, Fraction)):
            return ParamScalar.const(other)
        return None

    def _inv_union(self, o):
        a, b = self.invertible, o.invertible
        if a is b or not b:
            return a
        if not a:
            return b
        return a | b

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms = dict(self.terms)
        for mono, c in o.terms.items():
            prev = terms.get(mono)
            if prev is None:
                terms[mono] = c
            else:
                s = prev + c
                if s.is_zero():
                    del terms[mono]
                else:
                    terms[mono] = s
        return ParamScalar._raw(terms, self._inv_union(o))

    __radd__ = __add__

    def __neg__(self):
        return ParamScalar._raw({m: -c for m, c in self.terms.items()}, self.invertible)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                m = _mono_mul(m1, m2)
                c = c1 * c2
                prev = terms.get(m)
                if prev is None:
                    terms[m] = c
                else:
                    s = prev + c
                    if s.is_zero():
                        del terms[m]
                    else:
                        terms[m] = s
        return ParamScalar._raw(terms, self._inv_union(o))

    __rmul__ = __mul__

    def inverse(self):
        """Inverse of a unit: one term, invertible parameters, nonzero coefficient."""
        if not self.is_unit():
            raise InversionOfNonUnit(f"{self} is not a unit")
        ((mono, c),) = self.terms.items()
        return ParamScalar._raw(
            {tuple((n, -e) for n, e in mono): c.inverse()}, self.invertible
        )

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e == 0:
            return ParamScalar.const(1)
        base = self
        if e < 0:
            base = self.inverse()
            e = -e
        if len(base.terms) == 1:
            ((mono, c),) = base.terms.items()
            return ParamScalar._raw(
                {tuple((n, x * e) for n, x in mono): c ** e}, base.invertible
            )
        result = ParamScalar.const(1)
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # comparison -----------------------------------------------------------
    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if len(self.terms) != len(o.terms):
            return False
        for mono, c in self.terms.items():
            c2 = o.terms.get(mono)
            if c2 is None or c2 != c:
                return False
        return True

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant())
            else:
                self._hash = hash(frozenset((m, hash(c)) for m, c in self.terms.items()))
        return self._hash

    # evaluation -------------------------------------------------------------
    def subs(self, mapping):
        """Substitute scalars for some parameters; others stay symbolic."""
        result = ParamScalar._raw({}, self.invertible - set(mapping))
        for mono, c in self.terms.items():
            term = ParamScalar._raw({(): c}, frozenset())
            rest = []
            for name, e in mono:
                if name in mapping:
                    val = mapping[name]
                    if not isinstance(val, ParamScalar):
                        val = ParamScalar.const(val)
                    if e < 0 and val.is_zero():
                        raise ZeroForInvertible(f"{name} assigned zero")
                    term = term * (val ** e)
                else:
                    rest.append((name, e))
            if rest:
                term = term * ParamScalar._raw(
                    {tuple(rest): CycloNumber.rational(1)},
                    frozenset(n for n, _ in rest if n in self.invertible),
                )
            result = result + term
        return result

    # printing -------------------------------------------------------------
    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0])

    def to_str(self, order=None):
        if not self.terms:
            return "0"
        pieces = []
        for mono, c in self.sorted_terms():
            cs = c.to_str(order)
            mono_s = " ".join(n if e == 1 else f"{n}^{e}" for n, e in mono)
            if not mono:
                sign, body = ("-", cs[1:]) if cs.startswith("-") else ("+", cs)
            else:
                if cs == "1":
                    sign, body = "+", mono_s
                elif cs == "-1":
                    sign, body = "-", mono_s
                elif sum(1 for v in c.num if v) == 1:
                    sign, body = ("-", f"{cs[1:]} {mono_s}") if cs.startswith("-") else ("+", f"{cs} {mono_s}")
                else:
                    sign, body = "+", f"({cs}) {mono_s}"
            pieces.append((sign, body))
        out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"ParamScalar({self.to_str()!r})"


def as_scalar(x):
    """Coerce ints, fractions and CycloNumbers to ParamScalar."""
    if isinstance(x, ParamScalar):
        return x
    return ParamScalar.const(x)


def instantiate(p, assignment):
    """Evaluate ``p`` to a CycloNumber under a full parameter assignment."""
    p = as_scalar(p)
    for name in sorted(p.params()):
        if name not in assignment:
            raise MissingParameter(name)
    for name in p.invertible:
        if name in assignment and as_scalar(assignment[name]).is_zero():
            raise ZeroForInvertible(f"invertible parameter {name} assigned zero")
    return p.subs(assignment).constant()


# ---------------------------------------------------------------------------
# q-numbers as integer polynomials evaluated at q


def _check_n(n):
    if not isinstance(n, int) or n < 0:
        raise IndexOutOfRange(f"n must be a nonnegative integer, got {n!r}")


@lru_cache(maxsize=None)
def _qnum_poly(n):
    return (1,) * n


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


@lru_cache(maxsize=None)
def _qfact_poly(n):
    p = (1,)
    for k in range(1, n + 1):
        p = _poly_mul(p, _qnum_poly(k))
    return p


@lru_cache(maxsize=None)
def _qbinom_poly(n, i):
    if i == 0 or i == n:
        return (1,)
    # q-Pascal: binom(n,i) = binom(n-1,i-1) + q^i binom(n-1,i)
    a = _qbinom_poly(n - 1, i - 1)
    b = (0,) * i + _qbinom_poly(n - 1, i)
    size = max(len(a), len(b))
    return tuple((a[k] if k < len(a) else 0) + (b[k] if k < len(b) else 0) for k in range(size))


def _evaluate(poly, q):
    if isinstance(q, (int, Fraction)):
        q = CycloNumber.rational(q)
    acc = q * 0
    for c in reversed(poly):
        acc = acc * q + c
    return acc


def q_number(n, q):
    """(n)_q = 1 + q + ... + q^(n-1)."""
    _check_n(n)
    return _evaluate(_qnum_poly(n), q)


def q_factorial(n, q):
    _check_n(n)
    return _evaluate(_qfact_poly(n), q)


def q_binomial(n, i, q):
    _check_n(n)
    if not isinstance(i, int) or not 0 <= i <= n:
        raise IndexOutOfRange(f"need 0 <= i <= n, got n={n}, i={i}")
    return _evaluate(_qbinom_poly(n, i), q)


def q_binomial_poly(n, i):
    """Integer coefficients of the Gaussian binomial, lowest degree first."""
    q_binomial(n, i, 0)  # argument validation
    return _qbinom_poly(n, i)


def q_number_factorial_binomial(n, i, q, kind="binomial"):
    if kind == "number":
        return q_number(n, q)
    if kind == "factorial":
        return q_factorial(n, q)
    if kind == "binomial":
        return q_binomial(n, i, q)
    raise ValueError(f"unknown selector {kind!r}")

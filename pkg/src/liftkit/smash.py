"""The smash product k<X> # k[Gamma] and q-commutator calculus.

Monomials are pairs ``(word, group)`` meaning ``x_word * g``, group on the
right.  ``group`` is an exponent vector in the coordinates of the active
``GroupRealization``; the default realization is the free abelian group on
``g_1 .. g_theta`` with ``chi_j(g_i) = q_ij``.

Coefficients are CycloNumbers or ParamScalars; both expose the same ring
interface, and purely numeric sessions stay on the faster CycloNumber path.
"""

from __future__ import annotations

from .braiding import BraidingMatrix, bicharacter, word_degree
from .errors import InvalidRealization, NotHomogeneous
from .scalars import CycloNumber, ParamScalar, as_scalar

__all__ = [
    "GroupRealization",
    "SmashAlgebra",
    "SmashElement",
    "smash_mul",
    "multidegree",
    "q_commutator",
    "power",
    "random_homogeneous",
    "commutator_identities",
    "q_leibniz",
    "restricted_q_leibniz",
]


class GroupRealization:
    """A finitely generated abelian group Gamma = Z^a x prod Z/m with data g_i, chi_j.

    ``torsion[k]`` is 0 for a free coordinate and m > 0 for Z/m.
    ``images[i]`` is the coordinate vector of g_{i+1}; ``chars[j][k]`` is the
    value of chi_{j+1} on the k-th coordinate generator.
    """

    def __init__(self, torsion, images, chars, q=None):
        self.torsion = tuple(int(t) for t in torsion)
        self.images = tuple(tuple(int(e) for e in img) for img in images)
        self.chars = tuple(tuple(as_scalar(c) for c in row) for row in chars)
        r = len(self.torsion)
        theta = len(self.images)
        if any(len(img) != r for img in self.images) or len(self.chars) != theta:
            raise InvalidRealization("shape mismatch between torsion, images and characters")
        for j, row in enumerate(self.chars):
            if len(row) != r:
                raise InvalidRealization("character table has the wrong width")
            for k, val in enumerate(row):
                m = self.torsion[k]
                if m and val ** m != as_scalar(1):
                    raise InvalidRealization(
                        f"chi_{j + 1} on generator {k + 1} is not an {m}-th root of unity"
                    )
        self.theta = theta
        if q is not None:
            self.validate(q)

    @classmethod
    def free(cls, q):
        theta = q.theta
        images = [[1 if k == i else 0 for k in range(theta)] for i in range(theta)]
        chars = [[q[k + 1, j + 1] for k in range(theta)] for j in range(theta)]
        return cls([0] * theta, images, chars)

    @classmethod
    def cyclic_product(cls, q, orders):
        """Gamma = prod Z/orders[i] with g_i the i-th generator."""
        theta = q.theta
        images = [[1 if k == i else 0 for k in range(theta)] for i in range(theta)]
        chars = [[q[k + 1, j + 1] for k in range(theta)] for j in range(theta)]
        return cls(orders, images, chars, q=q)

    @property
    def is_finite(self):
        return all(self.torsion)

    @property
    def order(self):
        if not self.is_finite:
            return None
        n = 1
        for m in self.torsion:
            n *= m
        return n

    def reduce(self, vec):
        return tuple(e % m if m else e for e, m in zip(vec, self.torsion))

    def from_generators(self, exps):
        """Coordinates of g_1^e_1 ... g_theta^e_theta."""
        r = len(self.torsion)
        out = [0] * r
        for e, img in zip(exps, self.images):
            if e:
                for k in range(r):
                    out[k] += e * img[k]
        return self.reduce(out)

    def character(self, j, vec):
        """chi_j evaluated on the group element with coordinates ``vec``."""
        out = as_scalar(1)
        for k, e in enumerate(vec):
            if e:
                out = out * self.chars[j - 1][k] ** e
        return out

    def is_identity(self, vec):
        return not any(self.reduce(vec))

    def validate(self, q):
        for i in range(1, q.theta + 1):
            gi = self.images[i - 1]
            for j in range(1, q.theta + 1):
                if self.character(j, gi) != q[i, j]:
                    raise InvalidRealization(f"chi_{j}(g_{i}) differs from q{i}{j}")
        return True


def _simplify(c):
    """Demote constant ParamScalars so numeric work stays on CycloNumbers."""
    if isinstance(c, ParamScalar) and c.is_constant():
        return c.constant()
    if isinstance(c, (int,)):
        return CycloNumber.rational(c)
    return c


class SmashAlgebra:
    """Context object: braiding, realization and memo tables."""

    def __init__(self, q, realization=None, order=None):
        if not isinstance(q, BraidingMatrix):
            q = BraidingMatrix(q)
        self.q = q
        self.theta = q.theta
        self.realization = realization or GroupRealization.free(q)
        if realization is not None:
            realization.validate(q)
        self.order = order or max(q.root_order(), 1)
        self.rank = len(self.realization.torsion)
        self.identity = (0,) * self.rank
        self._char = {}
        self._super = {}
        self._gens = tuple(self.realization.from_generators(tuple(1 if k == i else 0 for k in range(self.theta))) for i in range(self.theta))

    # group helpers ----------------------------------------------------------
    def group(self, exps):
        """Group element g_1^e_1 ... g_theta^e_theta in realization coordinates."""
        return self.realization.from_generators(exps)

    def gen(self, i):
        return self._gens[i - 1]

    def gmul(self, a, b):
        if not any(a):
            return b
        if not any(b):
            return a
        return self.realization.reduce(tuple(x + y for x, y in zip(a, b)))

    def ginv(self, a):
        return self.realization.reduce(tuple(-x for x in a))

    def group_of_word(self, word):
        return self.group(word_degree(word, self.theta))

    def char(self, grp, deg):
        """chi_deg(grp) = prod_j chi_j(grp)^deg_j."""
        key = (grp, deg)
        hit = self._char.get(key)
        if hit is None:
            val = as_scalar(1)
            for j, dj in enumerate(deg, start=1):
                if dj:
                    val = val * self.realization.character(j, grp) ** dj
            hit = _simplify(val)
            self._char[key] = hit
        return hit

    def bichar(self, a, b):
        return _simplify(bicharacter(self.q, a, b))

    # element constructors -----------------------------------------------------
    def element(self, terms):
        return SmashElement(self, terms)

    def zero(self):
        return SmashElement(self, {})

    def one(self):
        return self.scalar(1)

    def scalar(self, c):
        c = _simplify(c)
        return SmashElement(self, {((), self.identity): c}) if not c.is_zero() else self.zero()

    def x(self, i):
        return SmashElement(self, {((i,), self.identity): CycloNumber.rational(1)})

    def g(self, exps):
        return SmashElement(self, {((), self.group(exps)): CycloNumber.rational(1)})

    def monomial(self, word, grp=None, coeff=1):
        grp = self.identity if grp is None else grp
        return SmashElement(self, {(tuple(word), grp): _simplify(coeff)})

    def word(self, w):
        return self.monomial(w)

    def super_letter(self, u):
        u = tuple(u)
        hit = self._super.get(u)
        if hit is None:
            if len(u) == 1:
                hit = self.x(u[0])
            else:
                from .lyndon import shirshov_decompose

                v, w = shirshov_decompose(u)
                hit = q_commutator(self.super_letter(v), self.super_letter(w))
            self._super[u] = hit
        return hit

    def super_word(self, U):
        out = self.one()
        for u in U:
            out = out * self.super_letter(u)
        return out

    def degree(self, word):
        return word_degree(word, self.theta)


class SmashElement:
    """Finite sum of c * x_word * g with the group part on the right."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg, terms):
        self.alg = alg
        self.terms = {k: v for k, v in terms.items() if not v.is_zero()} if terms else {}

    @classmethod
    def _raw(cls, alg, terms):
        obj = cls.__new__(cls)
        obj.alg = alg
        obj.terms = terms
        return obj

    def _coerce(self, other):
        if isinstance(other, SmashElement):
            return other
        if isinstance(other, (int, CycloNumber, ParamScalar)):
            return self.alg.scalar(other)
        return None

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms = dict(self.terms)
        for k, c in o.terms.items():
            prev = terms.get(k)
            if prev is None:
                terms[k] = c
            else:
                s = prev + c
                if s.is_zero():
                    del terms[k]
                else:
                    terms[k] = s
        return SmashElement._raw(self.alg, terms)

    __radd__ = __add__

    def __neg__(self):
        return SmashElement._raw(self.alg, {k: -c for k, c in self.terms.items()})

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

    def scale(self, c):
        c = _simplify(c)
        if c.is_zero():
            return SmashElement._raw(self.alg, {})
        out = {}
        for k, v in self.terms.items():
            p = v * c
            if not p.is_zero():
                out[k] = p
        return SmashElement._raw(self.alg, out)

    def __mul__(self, other):
        if isinstance(other, (int, CycloNumber, ParamScalar)):
            return self.scale(other)
        if not isinstance(other, SmashElement):
            return NotImplemented
        return smash_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, CycloNumber, ParamScalar)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n):
        return power(self, n)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).is_zero()

    __hash__ = None

    def right_group(self, grp):
        """Multiply by a group element on the right."""
        alg = self.alg
        return SmashElement._raw(alg, {(w, alg.gmul(g, grp)): c for (w, g), c in self.terms.items()})

    def coeff(self, word, grp=None):
        grp = self.alg.identity if grp is None else grp
        return self.terms.get((tuple(word), grp), CycloNumber.rational(0))

    def multidegree(self):
        return multidegree(self)

    def max_length(self):
        return max((len(w) for w, _ in self.terms), default=-1)

    def homogeneous_part(self, length):
        return SmashElement._raw(self.alg, {k: c for k, c in self.terms.items() if len(k[0]) == length})

    def map_coefficients(self, fn):
        out = {}
        for k, c in self.terms.items():
            v = _simplify(fn(c))
            if not v.is_zero():
                out[k] = v
        return SmashElement._raw(self.alg, out)

    def params(self):
        out = set()
        for c in self.terms.values():
            if isinstance(c, ParamScalar):
                out |= c.params()
        return out

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (len(kv[0][0]), kv[0][0], kv[0][1]))

    def to_str(self, order=None):
        order = order or self.alg.order
        if not self.terms:
            return "0"
        return format_terms(self.sorted_terms(), lambda key: format_monomial(self.alg, *key), order)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"SmashElement({self.to_str()!r})"


def format_group(alg, grp):
    """Group part as g-generator powers when possible."""
    if not any(grp):
        return ""
    real = alg.realization
    # the default realizations map g_i to the i-th coordinate
    if all(real.images[i] == tuple(1 if k == i else 0 for k in range(len(real.torsion))) for i in range(alg.theta)) and len(real.torsion) == alg.theta:
        return " ".join(f"g{k + 1}" if e == 1 else f"g{k + 1}^{e}" for k, e in enumerate(grp) if e)
    return "g(" + ",".join(str(e) for e in grp) + ")"


def format_monomial(alg, word, grp):
    parts = [f"x{i}" for i in word]
    gs = format_group(alg, grp)
    if gs:
        parts.append(gs)
    return " ".join(parts)


def format_terms(items, mono_fmt, order):
    pieces = []
    for key, c in items:
        mono = mono_fmt(key)
        cs = c.to_str(order)
        neg = False
        if not mono:
            if not _single_term(c):
                body = f"({cs})"
            elif cs.startswith("-"):
                neg, body = True, cs[1:]
            else:
                body = cs
        elif cs == "1":
            body = mono
        elif cs == "-1":
            neg, body = True, mono
        elif _single_term(c):
            if cs.startswith("-"):
                neg, body = True, f"{cs[1:]} {mono}"
            else:
                body = f"{cs} {mono}"
        else:
            body = f"({cs}) {mono}"
        pieces.append((neg, body))
    out = ("-" if pieces[0][0] else "") + pieces[0][1]
    for neg, body in pieces[1:]:
        out += (" - " if neg else " + ") + body
    return out


def _single_term(c):
    if isinstance(c, CycloNumber):
        return sum(1 for v in c.num if v) <= 1
    if len(c.terms) > 1:
        return False
    if not c.terms:
        return True
    ((mono, cc),) = c.terms.items()
    return sum(1 for v in cc.num if v) <= 1


def smash_mul(a, b):
    """Product in the smash algebra: g x_j = chi_j(g) x_j g."""
    alg = a.alg
    out = {}
    identity = alg.identity
    bterms = [((w2, g2), c2, alg.degree(w2)) for (w2, g2), c2 in b.terms.items()]
    for (w1, g1), c1 in a.terms.items():
        moving = g1 != identity
        for (w2, g2), c2, d2 in bterms:
            c = c1 * c2
            if moving and w2:
                c = c * alg.char(g1, d2)
            key = (w1 + w2, alg.gmul(g1, g2))
            prev = out.get(key)
            if prev is None:
                out[key] = c
            else:
                s = prev + c
                if s.is_zero():
                    del out[key]
                else:
                    out[key] = s
    return SmashElement._raw(alg, {k: v for k, v in out.items() if not v.is_zero()})


def multidegree(a):
    """Common word multidegree of all terms, or None if not homogeneous (or zero)."""
    deg = None
    for (w, _g) in a.terms:
        d = a.alg.degree(w)
        if deg is None:
            deg = d
        elif d != deg:
            return None
    return deg


def q_commutator(a, b):
    """[a, b] = ab - q_{a,b} ba for Z^theta-homogeneous a, b."""
    if a.is_zero() or b.is_zero():
        return a.alg.zero()
    da, db = multidegree(a), multidegree(b)
    if da is None or db is None:
        raise NotHomogeneous("q-commutator needs homogeneous arguments")
    return a * b - (b * a).scale(a.alg.bichar(da, db))


def power(a, n):
    if not isinstance(n, int) or n < 0:
        raise ValueError("power needs a nonnegative integer exponent")
    result = a.alg.one()
    base = a
    while n:
        if n & 1:
            result = result * base
        n >>= 1
        if n:
            base = base * base
    return result


def random_homogeneous(alg, deg, rng, terms=3, coeffs=(-3, -2, -1, 1, 2, 3)):
    """A random element whose words all have multidegree ``deg``.

    ``rng`` is a ``random.Random``; coefficients are small integers so the
    checks stay exact and fast.
    """
    letters = [i + 1 for i, d in enumerate(deg) for _ in range(d)]
    if not letters:
        raise ValueError("degree must be nonzero")
    out = alg.zero()
    while out.is_zero():
        for _ in range(terms):
            w = letters[:]
            rng.shuffle(w)
            out = out + alg.word(tuple(w)).scale(CycloNumber.rational(rng.choice(coeffs)))
    return out


def _q(a, b):
    return a.alg.bichar(multidegree(a), multidegree(b))


def commutator_identities(a, b, c):
    """The q-derivation and q-Jacobi identities for homogeneous nonzero a, b, c.

    Returns ``{name: holds}``.
    """
    br = q_commutator
    qab, qbc = _q(a, b), _q(b, c)
    return {
        "derivation-left": br(a, b * c) == br(a, b) * c + (b * br(a, c)).scale(qab),
        "derivation-right": br(a * b, c) == a * br(b, c) + (br(a, c) * b).scale(qbc),
        "jacobi": br(br(a, b), c)
        == br(a, br(b, c)) - (b * br(a, c)).scale(qab) + (br(a, c) * b).scale(qbc),
    }


def _iterated(a, b, k, side):
    out = a if side == "left" else b
    for _ in range(k):
        out = q_commutator(out, b) if side == "left" else q_commutator(a, out)
    return out


def q_leibniz(a, b, r):
    """Both q-Leibniz expansions of [a, b^r] and [a^r, b]; returns (left ok, right ok)."""
    from .scalars import q_binomial

    qab = _q(a, b)
    qbb, qaa = _q(b, b), _q(a, a)
    rhs_l = a.alg.zero()
    rhs_r = a.alg.zero()
    for i in range(r):
        rhs_l = rhs_l + (power(b, i) * _iterated(a, b, r - i, "left")).scale(qab ** i * q_binomial(r, i, qbb))
        rhs_r = rhs_r + (_iterated(a, b, r - i, "right") * power(a, i)).scale(qab ** i * q_binomial(r, i, qaa))
    return q_commutator(a, power(b, r)) == rhs_l, q_commutator(power(a, r), b) == rhs_r


def restricted_q_leibniz(a, b, r):
    """[a, b^r] and [a^r, b] against the r-fold iterated brackets (meant for ord q = r)."""
    return (
        q_commutator(a, power(b, r)) == _iterated(a, b, r, "left"),
        q_commutator(power(a, r), b) == _iterated(a, b, r, "right"),
    )

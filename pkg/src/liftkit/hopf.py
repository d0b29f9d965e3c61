"""Coproducts in the smash algebra and skew-primitivity certificates.

Tensor legs are smash monomials ``(word, group)``; the tensor square is an
ordinary algebra (componentwise product).  When a RewriteSystem is given,
every product is followed by reducing both legs to normal form, so large
coproducts stay small and a zero result certifies membership in
``A (x) I + I (x) A``.
"""

from __future__ import annotations

from .grammar import evaluate, parse
from .lyndon import format_word, is_lyndon, shirshov_decompose
from .pbw import _add_into
from .scalars import CycloNumber, multiplicative_order, q_number
from .smash import SmashElement, _simplify, format_monomial, format_terms, multidegree

__all__ = [
    "TensorElement",
    "coproduct",
    "skew_defect",
    "is_skew_primitive",
    "is_skew_primitive_mod",
    "serre_vector",
    "serre_vector_primitive",
    "CoproductBuilder",
    "SkewCertificate",
    "NormalFormBuilder",
    "reduce_legs",
    "tensor_mul",
    "alpha_beta_gamma",
    "seven_term_expansion",
    "three_term_expansion",
]


class TensorElement:
    """Sum of c * (w1 g1) (x) (w2 g2)."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg, terms):
        self.alg = alg
        self.terms = terms

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        terms = dict(self.terms)
        for k, c in other.terms.items():
            _add_into(terms, k, c)
        return TensorElement(self.alg, terms)

    def __neg__(self):
        return TensorElement(self.alg, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = _simplify(c)
        if c.is_zero():
            return TensorElement(self.alg, {})
        return TensorElement(self.alg, {k: v * c for k, v in self.terms.items() if not (v * c).is_zero()})

    def __mul__(self, other):
        return tensor_mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    @classmethod
    def pure(cls, a, b):
        """a (x) b for SmashElements."""
        terms = {}
        for k1, c1 in a.terms.items():
            for k2, c2 in b.terms.items():
                _add_into(terms, (k1, k2), c1 * c2)
        return cls(a.alg, terms)

    def sorted_terms(self):
        return sorted(
            self.terms.items(),
            key=lambda kv: (len(kv[0][0][0]) + len(kv[0][1][0]), kv[0][0][0], kv[0][1][0], kv[0][0][1], kv[0][1][1]),
        )

    def to_str(self, order=None):
        order = order or self.alg.order
        if not self.terms:
            return "0"
        alg = self.alg

        def fmt(key):
            left = format_monomial(alg, *key[0]) or "1"
            right = format_monomial(alg, *key[1]) or "1"
            return f"{left} (x) {right}"

        return format_terms(self.sorted_terms(), fmt, order)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"TensorElement({self.to_str()!r})"


def _leg_mul(alg, m1, m2):
    (w1, g1), (w2, g2) = m1, m2
    c = None
    if w2 and g1 != alg.identity:
        c = alg.char(g1, alg.degree(w2))
    return (w1 + w2, alg.gmul(g1, g2)), c


def tensor_mul(a, b, sys=None):
    alg = a.alg
    out = {}
    for (l1, r1), c1 in a.terms.items():
        for (l2, r2), c2 in b.terms.items():
            lk, lc = _leg_mul(alg, l1, l2)
            rk, rc = _leg_mul(alg, r1, r2)
            c = c1 * c2
            if lc is not None:
                c = c * lc
            if rc is not None:
                c = c * rc
            _add_into(out, (lk, rk), c)
    t = TensorElement(alg, out)
    return reduce_legs(t, sys) if sys is not None else t


def reduce_legs(t, sys):
    """Normal form of both legs (right leg first, then left)."""
    alg = t.alg
    step = {}
    for (l, (w2, g2)), c in t.terms.items():
        for (v, h), c2 in sys.nf_word(w2).items():
            _add_into(step, (l, (v, alg.gmul(h, g2))), c * c2)
    out = {}
    for ((w1, g1), r), c in step.items():
        for (v, h), c2 in sys.nf_word(w1).items():
            _add_into(out, ((v, alg.gmul(h, g1)), r), c * c2)
    return TensorElement(alg, out)


def _delta_letter(alg, i):
    one = CycloNumber.rational(1)
    ident = alg.identity
    return TensorElement(
        alg,
        {(((i,), ident), ((), ident)): one, (((), alg.gen(i)), ((i,), ident)): one},
    )


def _delta_group(alg, g):
    return TensorElement(alg, {(((), g), ((), g)): CycloNumber.rational(1)})


def coproduct(a, sys=None):
    """Delta(a) extending x_i -> x_i (x) 1 + g_i (x) x_i and g -> g (x) g."""
    alg = a.alg
    memo = {(): TensorElement(alg, {(((), alg.identity), ((), alg.identity)): CycloNumber.rational(1)})}

    def dw(w):
        hit = memo.get(w)
        if hit is None:
            hit = tensor_mul(dw(w[:-1]), _delta_letter(alg, w[-1]), sys)
            memo[w] = hit
        return hit

    out = {}
    for (w, g), c in a.terms.items():
        t = tensor_mul(dw(w), _delta_group(alg, g), sys) if any(g) else dw(w)
        for k, v in t.terms.items():
            _add_into(out, k, v * c)
    return TensorElement(alg, out)


def skew_defect(a, g, sys=None):
    """Delta(a) - a (x) 1 - g (x) a."""
    delta = coproduct(a, sys)
    if sys is not None:
        a = sys.nf(a, complete=False)
    return _subtract_primitive_part(delta, a, g)


def _subtract_primitive_part(delta, a, g):
    alg = delta.alg
    one = alg.one()
    t = delta - TensorElement.pure(a, one) - TensorElement.pure(alg.element({((), g): CycloNumber.rational(1)}), a)
    return t


def is_skew_primitive(a, g):
    return skew_defect(a, g).is_zero()


class CoproductBuilder:
    """Evaluates grammar ASTs straight into coproducts, reducing legs as it goes."""

    def __init__(self, alg, sys=None):
        self.alg = alg
        self.sys = sys
        self._super = {}

    def _check(self, i, pos):
        from .errors import ExpressionSyntaxError

        if not 1 <= i <= self.alg.theta:
            raise ExpressionSyntaxError(f"index {i} outside 1..{self.alg.theta}", pos)

    def letter(self, i, pos):
        self._check(i, pos)
        t = _delta_letter(self.alg, i)
        return reduce_legs(t, self.sys) if self.sys is not None else t

    def group(self, i, e, pos):
        self._check(i, pos)
        exps = [0] * self.alg.theta
        exps[i - 1] = e
        return _delta_group(self.alg, self.alg.group(exps))

    def bracket(self, word, pos):
        from .errors import NotLyndonInBrackets

        if not is_lyndon(word):
            raise NotLyndonInBrackets(f"[{format_word(word)}] is not a Lyndon word")
        return self.super_letter(word)

    def super_letter(self, u):
        hit = self._super.get(u)
        if hit is None:
            if len(u) == 1:
                hit = self.letter(u[0], 0)
            else:
                v, w = shirshov_decompose(u)
                a, b = self.super_letter(v), self.super_letter(w)
                alg = self.alg
                qvw = alg.bichar(alg.degree(v), alg.degree(w))
                hit = self.mul(a, b) - self.mul(b, a).scale(qvw)
            self._super[u] = hit
        return hit

    def lift(self, c):
        alg = self.alg
        return TensorElement(alg, {(((), alg.identity), ((), alg.identity)): _simplify(c)})

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return tensor_mul(a, b, self.sys)

    def scale(self, a, c):
        return a.scale(c)

    def pow(self, a, n):
        result = self.lift(1)
        base = a
        while n:
            if n & 1:
                result = self.mul(result, base)
            n >>= 1
            if n:
                base = self.mul(base, base)
        return result


class NormalFormBuilder:
    """Evaluates ASTs into normal-form term dicts of a RewriteSystem."""

    def __init__(self, sys):
        self.sys = sys
        self.alg = sys.alg

    def letter(self, i, pos):
        return self.sys.nf_word((i,))

    def group(self, i, e, pos):
        exps = [0] * self.alg.theta
        exps[i - 1] = e
        return {((), self.alg.group(exps)): CycloNumber.rational(1)}

    def bracket(self, word, pos):
        from .errors import NotLyndonInBrackets

        if not is_lyndon(word):
            raise NotLyndonInBrackets(f"[{format_word(word)}] is not a Lyndon word")
        return self.sys._nf_super_letter(tuple(word))

    def lift(self, c):
        return {((), self.alg.identity): _simplify(c)}

    def add(self, a, b):
        out = dict(a)
        for k, c in b.items():
            _add_into(out, k, c)
        return out

    def mul(self, a, b):
        return self.sys.nf_mul(a, b)

    def scale(self, a, c):
        c = _simplify(c)
        out = {}
        for k, v in a.items():
            p = v * c
            if not p.is_zero():
                out[k] = p
        return out

    def pow(self, a, n):
        result = self.lift(1)
        for _ in range(n):
            result = self.mul(result, a)
        return result


class SkewCertificate:
    """Outcome of a skew-primitivity check modulo a rewrite system."""

    def __init__(self, certified, defect, degree_bound):
        self.certified = certified
        self.defect = defect
        self.degree_bound = degree_bound

    def __bool__(self):
        return self.certified

    @property
    def status(self):
        return "certified" if self.certified else "not certified"


def is_skew_primitive_mod(a, g, sys, symbols=None):
    """Certify Delta(a) - a (x) 1 - g (x) a in A (x) I + I (x) A.

    ``a`` is a SmashElement or an element in the text grammar; text is
    evaluated structurally (coproducts of brackets and powers are built
    from their factors) so large elements never get expanded into words.
    """
    alg = sys.alg
    if isinstance(a, str):
        node = parse(a)
        deg = _ast_degree(node)
        sys.complete(deg)
        delta = evaluate(node, CoproductBuilder(alg, sys), alg.order, symbols)
        nf = evaluate(node, NormalFormBuilder(sys), alg.order, symbols)
        if not isinstance(delta, TensorElement):
            delta = CoproductBuilder(alg, sys).lift(delta)
        if not isinstance(nf, dict):
            nf = NormalFormBuilder(sys).lift(nf)
        a_nf = SmashElement._raw(alg, nf)
    else:
        deg = max(a.max_length(), 0)
        sys.complete(deg)
        delta = coproduct(a, sys)
        a_nf = sys.nf(a, complete=False)
    defect = reduce_legs(_subtract_primitive_part(delta, a_nf, g), sys)
    return SkewCertificate(defect.is_zero(), defect, sys.done)


def _ast_degree(node):
    """Upper bound for the word length of an AST's value."""
    k = node.kind
    if k == "x":
        return 1
    if k == "br":
        return len(node.args[0])
    if k in ("num", "zeta", "param", "g"):
        return 0
    if k == "pow":
        return _ast_degree(node.args[0]) * max(node.args[1], 0)
    if k == "mul":
        return sum(_ast_degree(n) for n in node.args)
    if k == "add":
        return max(_ast_degree(n) for _, n in node.args)
    raise AssertionError(k)


def serre_vector(alg, i, j, r, side="left"):
    """[x_i^r x_j] (side='left') or [x_i x_j^r] (side='right')."""
    word = (i,) * r + (j,) if side == "left" else (i,) + (j,) * r
    return alg.super_letter(word)


def serre_vector_primitive(alg, i, j, r, side="left"):
    """Check the skew-primitivity of a Serre vector and whether the lemma's hypothesis holds.

    Returns ``(hypothesis, primitive)``.  For side='left' the hypothesis is
    q_ij q_ji = q_ii^-(r-1) with r <= ord q_ii; side='right' mirrors it;
    side='power' tests x_i^r with ord q_ii = r.
    """
    q = alg.q
    if side == "power":
        a = alg.x(i) ** r
        hyp = multiplicative_order(q[i, i].constant()) == r if q[i, i].is_constant() else False
        g = alg.group(tuple(r if k == i - 1 else 0 for k in range(alg.theta)))
        return hyp, is_skew_primitive(a, g)
    a = serre_vector(alg, i, j, r, side)
    if side == "left":
        base = i
    else:
        base = j
    qbb = q[base, base]
    hyp = q[i, j] * q[j, i] == qbb ** (-(r - 1))
    if hyp and qbb.is_constant():
        order = multiplicative_order(qbb.constant())
        hyp = order is None or r <= order
    deg = multidegree(a) or alg.degree(((i,) * r + (j,)) if side == "left" else ((i,) + (j,) * r))
    g = alg.group(deg)
    return hyp, is_skew_primitive(a, g)


# ---------------------------------------------------------------------------
# closed coproduct formulas in rank two, used as oracles


def alpha_beta_gamma(q):
    """The three coefficients of the closed form of Delta([x1x1x2x1x2])."""
    q11, q12, q21, q22 = q[1, 1], q[1, 2], q[2, 1], q[2, 2]
    p = q12 * q21
    alpha = q_number(2, q11) * q11 * p * q22 * (1 - q11 * p) + 1 - q11 ** 4 * p ** 3 * q22 ** 2
    beta = 1 - q11 * p - q11 ** 2 * p ** 2 * q22
    gamma = (q11 ** 2 * p * (1 - p) * (q22 - q11)
             + q_number(2, q11) * (1 - q11 * p) * (1 - q11 ** 3 * p ** 2 * q22))
    return alpha, beta, gamma


def seven_term_expansion(alg):
    """Delta([x1x1x2x1x2]) written out term by term with alpha, beta, gamma."""
    from .grammar import parse_element

    q = alg.q
    q11, q21, q22 = q[1, 1], q[2, 1], q[2, 2]
    p = q[1, 2] * q21
    alpha, beta, gamma = alpha_beta_gamma(q)

    def e(text):
        return parse_element(text, alg)

    T = TensorElement.pure
    u = e("[x1x1x2x1x2]")
    return (
        T(u, alg.one())
        + T(e("g1^3 g2^2"), u)
        + T(e("[x1x1x2] g1 g2"), e("[x1x2]")).scale(alpha)
        + T(e("[x1x1x1x2] g2").scale((1 - p) * q21 * q22 * beta) + e("[x1x1x2] x1 g2").scale((1 - p) * alpha), e("x2"))
        + T(e("x1^2 g1 g2^2"),
            e("[x1x2x2]").scale(q11 * q21 * (1 + q11 - q11 ** 3 * p ** 2 * q22)) + e("x2 [x1x2]").scale(alpha)
            ).scale((1 - p) * (1 - q11 * p))
        + T(e("x1^3 g2^2"), e("x2^2")).scale(q21 * (1 - p) ** 2 * (1 - q11 * p) * (1 - q11 ** 2 * p ** 2 * q22))
        + T(e("x1 g1^2 g2^2"), e("[x1x2]^2").scale(gamma) + e("[x1x1x2x2]").scale(q11 ** 2 * q21 * (1 - p)))
    )


def three_term_expansion(alg, n):
    """Delta([x1x2]^n) modulo x2^2 = 0: the primitive part plus one cross term.

    The cross term is q_{2,12}^(n-1) (1 - q12 q21) [x1 (x1x2)^(n-1)] g2 (x) x2.
    """
    q = alg.q
    u = alg.super_letter((1, 2)) ** n
    word = (1,) + (1, 2) * (n - 1)
    coeff = alg.bichar((0, 1), (1, 1)) ** (n - 1) * (1 - q[1, 2] * q[2, 1])
    return (
        TensorElement.pure(u, alg.one())
        + TensorElement.pure(alg.g((n, n)), u)
        + TensorElement.pure(alg.super_letter(word) * alg.g((0, 1)), alg.x(2)).scale(coeff)
    )

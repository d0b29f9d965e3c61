"""Rewriting to PBW normal form, bounded confluence and dimension counting.

The engine works with words.  Monomials are ordered by length first; among
words of equal length the lexicographically SMALLER word is the larger
monomial.  Under this order the leading word of a super word
``[u_1]...[u_k]`` is the concatenation ``u_1...u_k``, so word normal forms
and PBW monomials correspond through Lyndon factorization.

``RewriteSystem`` completes its relation set degree by degree: each degree
collects the input relations and the overlap differences (critical pairs)
of that length, reduces them, and row-reduces their top-degree parts.
Pivots become new rules; a row whose top part cancels while a lower-degree
tail survives is recorded as an obstruction.  Normal forms are computed
through memoized left multiplication by single letters.
"""

from __future__ import annotations

import sys
from itertools import product as _iproduct

from .errors import (
    DegreeBoundTooSmall,
    InfiniteDimension,
    InversionOfNonUnit,
    NotCharacterHomogeneous,
    NotPrecL,
    ReductionDiverged,
)
from .lyndon import (
    format_super_word,
    is_lyndon,
    lyndon_factorization,
    shirshov_decompose,
)
from .scalars import CycloNumber, ParamScalar
from .smash import SmashElement, _simplify, format_terms

__all__ = [
    "Relation",
    "RewriteSystem",
    "PBWElement",
    "orient",
    "reduce",
    "check_local_confluence",
    "enumerate_pbw_basis",
    "span_dimension_oracle",
    "ConfluenceReport",
]

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))

STEP_CAP = 10 ** 6


def _add_into(acc, key, c):
    prev = acc.get(key)
    if prev is None:
        acc[key] = c
    else:
        s = prev + c
        if s.is_zero():
            del acc[key]
        else:
            acc[key] = s


def _inverse(c):
    if isinstance(c, ParamScalar):
        if c.is_constant():
            return c.constant().inverse()
        return c.inverse()
    return c.inverse()


def _word_key(w):
    # larger monomial sorts first: longer, then lexicographically smaller
    return (-len(w), w)


class Relation:
    """A generator ``lhs - rhs`` with ``lhs`` a super word (tuple of Lyndon words)."""

    def __init__(self, lhs, rhs, label=None, element=None):
        self.lhs = tuple(tuple(u) for u in lhs)
        self.rhs = rhs
        self.label = label or format_super_word(self.lhs)
        # an equivalent generator already reduced modulo smaller relations
        self._element = element

    @classmethod
    def from_generator(cls, lhs, generator, label=None):
        alg = generator.alg
        lead = alg.super_word(lhs)
        return cls(lhs, lead - generator, label)

    def element(self):
        if self._element is not None:
            return self._element
        return self.rhs.alg.super_word(self.lhs) - self.rhs

    @property
    def degree(self):
        return sum(len(u) for u in self.lhs)

    def lhs_word(self):
        return tuple(i for u in self.lhs for i in u)

    def __repr__(self):
        return f"Relation({self.label} -> {self.rhs})"


class PBWElement:
    """Linear combination of PBW monomials ``[u_1]...[u_k] g`` (factors decreasing)."""

    def __init__(self, alg, terms):
        self.alg = alg
        self.terms = terms  # {(superword, grp): coeff}

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, PBWElement):
            if set(self.terms) != set(other.terms):
                return False
            return all(self.terms[k] == other.terms[k] for k in self.terms)
        return NotImplemented

    __hash__ = None

    def to_smash(self):
        out = self.alg.zero()
        for (U, g), c in self.terms.items():
            out = out + self.alg.super_word(U).right_group(g).scale(c)
        return out

    def monomials(self):
        return sorted(self.terms, key=lambda k: (sum(len(u) for u in k[0]), k[0], k[1]))

    def to_str(self, order=None):
        from .smash import format_group

        order = order or self.alg.order
        if not self.terms:
            return "0"
        items = [(k, self.terms[k]) for k in self.monomials()]

        def fmt(key):
            U, g = key
            parts = [format_super_word(U)] if U else []
            gs = format_group(self.alg, g)
            if gs:
                parts.append(gs)
            return " ".join(parts)

        return format_terms(items, fmt, order)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"PBWElement({self.to_str()!r})"


class RewriteSystem:
    """Relations plus their degree-by-degree completion in the smash algebra."""

    def __init__(self, alg, relations, L=None, heights=None, name=""):
        self.alg = alg
        self.relations = list(relations)
        self.L = None if L is None else {tuple(u) for u in L}
        self.heights = dict(heights or {})
        self.name = name
        self.rules = {}  # leading word -> {(word, grp): coeff}
        self.normal = {0: [()]}
        self.done = 0
        self.obstructions = []
        self.pairs_checked = 0
        self.rule_degree_max = 0
        self._inputs = {}
        for rel in self.relations:
            el = rel.element() if isinstance(rel, Relation) else rel
            if el.is_zero():
                continue
            d = el.max_length()
            label = rel.label if isinstance(rel, Relation) else str(el)
            self._inputs.setdefault(d, []).append((label, dict(el.terms)))
        self.max_input_degree = max(self._inputs, default=0)
        self._nf = {}  # length -> {word: terms}
        self._lm = {}  # length of product -> {(i, word): terms}
        self._prefix = {}  # prefix -> list of rule words
        self._steps = 0
        self._super_nf = {}
        self._sw_nf = {}

    # normal forms -------------------------------------------------------------
    def _left_mul(self, i, v):
        u = (i,) + v
        bucket = self._lm.setdefault(len(u), {})
        hit = bucket.get(u)
        if hit is not None:
            return hit
        self._steps += 1
        if self._steps > STEP_CAP:
            raise ReductionDiverged(f"more than {STEP_CAP} rewrite steps")
        rules = self.rules
        result = None
        for k in range(2, min(len(u), self.rule_degree_max) + 1):
            rhs = rules.get(u[:k])
            if rhs is not None:
                tail = u[k:]
                result = self._rhs_times_word(rhs, tail)
                break
        if result is None:
            rhs = rules.get(u[:1])
            if rhs is not None:
                result = self._rhs_times_word(rhs, u[1:])
            else:
                result = {(u, self.alg.identity): CycloNumber.rational(1)}
        bucket[u] = result
        return result

    def _rhs_times_word(self, rhs, tail):
        alg = self.alg
        out = {}
        deg_t = alg.degree(tail)
        has_tail = bool(tail)
        ident = alg.identity
        for (w, g), c in rhs.items():
            if has_tail and g != ident:
                c = c * alg.char(g, deg_t)
            for (w2, g2), c2 in self.nf_word(w + tail).items():
                _add_into(out, (w2, alg.gmul(g2, g)), c * c2)
        return out

    def nf_word(self, w):
        """Normal form of a word under the current rules, as a term dict."""
        bucket = self._nf.setdefault(len(w), {})
        hit = bucket.get(w)
        if hit is not None:
            return hit
        if len(w) <= 1 and w not in self.rules:
            res = {(w, self.alg.identity): CycloNumber.rational(1)}
        else:
            rest = self.nf_word(w[1:])
            res = {}
            alg = self.alg
            for (v, g), c in rest.items():
                for (v2, g2), c2 in self._left_mul(w[0], v).items():
                    _add_into(res, (v2, alg.gmul(g2, g)), c * c2)
        bucket[w] = res
        return res

    def nf_terms(self, terms):
        alg = self.alg
        out = {}
        for (w, g), c in terms.items():
            for (w2, g2), c2 in self.nf_word(w).items():
                _add_into(out, (w2, alg.gmul(g2, g)), c * c2)
        return out

    def nf(self, a, complete=True):
        """Normal form of a SmashElement (completing the system far enough first)."""
        if complete:
            self.complete(self._needed_degree(a.max_length()))
        self._steps = 0
        return SmashElement._raw(self.alg, self.nf_terms(a.terms))

    def _needed_degree(self, d):
        return max(d, 0)

    def nf_mul(self, a, b):
        """Normal form of the product of two normal-form term dicts."""
        alg = self.alg
        out = {}
        ident = alg.identity
        for (w1, g1), c1 in a.items():
            for (w2, g2), c2 in b.items():
                c = c1 * c2
                if g1 != ident and w2:
                    c = c * alg.char(g1, alg.degree(w2))
                g = alg.gmul(g1, g2)
                for (w, h), c3 in self.nf_word(w1 + w2).items():
                    _add_into(out, (w, alg.gmul(h, g)), c * c3)
        return out

    # completion ---------------------------------------------------------------
    def _invalidate(self, d):
        for k in [k for k in self._nf if k >= d]:
            del self._nf[k]
        for k in [k for k in self._lm if k >= d]:
            del self._lm[k]
        self._super_nf.clear()
        self._sw_nf.clear()

    def _overlaps(self, d):
        """Critical pairs (l1, l2, k) whose overlap word has length d."""
        out = []
        for l1 in self.rules:
            a = len(l1)
            for k in range(1, a):
                b = d - a + k
                if b <= k:
                    continue
                for l2 in self._prefix.get(l1[a - k:], ()):
                    if len(l2) == b:
                        out.append((l1, l2, k))
        return out

    def _spoly(self, l1, l2, k):
        alg = self.alg
        t = l2[k:]
        p = l1[: len(l1) - k]
        out = self._rhs_times_word(self.rules[l1], t)
        for (w, g), c in self.rules[l2].items():
            for (w2, g2), c2 in self.nf_word(p + w).items():
                _add_into(out, (w2, alg.gmul(g2, g)), -(c * c2))
        return out

    def complete(self, degree):
        """Process all degrees up to ``degree``."""
        while self.done < degree:
            self._process(self.done + 1)
        return self

    def _process(self, d):
        alg = self.alg
        theta = alg.theta
        rows = []
        for label, terms in self._inputs.get(d, ()):
            rows.append((f"relation {label}", self.nf_terms(terms)))
        for l1, l2, k in self._overlaps(d):
            self.pairs_checked += 1
            rows.append((("overlap", l1, l2, k), self._spoly(l1, l2, k)))
        candidates = set()
        for v in self.normal.get(d - 1, ()):
            for i in range(1, theta + 1):
                u = (i,) + v
                if not any(u[:k] in self.rules for k in range(1, min(len(u), self.rule_degree_max) + 1)):
                    candidates.add(u)
        pivots = {}  # word -> row terms (normalized, leading word coefficient 1)
        order = []
        for label, row in rows:
            row = self._eliminate(row, pivots)
            top = [key for key in row if len(key[0]) == d]
            if not top:
                if row:
                    self.obstructions.append((label, SmashElement._raw(alg, row)))
                continue
            lead = min(top, key=lambda key: (key[0], key[1]))
            lw, lg = lead
            if sum(1 for key in top if key[0] == lw) > 1:
                raise InversionOfNonUnit(
                    f"leading word {lw} carries several group elements; cannot orient"
                )
            try:
                inv = _inverse(row[lead])
            except InversionOfNonUnit as exc:
                raise InversionOfNonUnit(f"non-unit leading coefficient at {lw}: {exc}") from None
            ginv = alg.ginv(lg)
            new = {}
            for (w, g), c in row.items():
                new[(w, alg.gmul(g, ginv))] = _simplify(c * inv)
            # back-substitute into earlier pivots
            for pw in order:
                prow = pivots[pw]
                hits = [key for key in prow if key[0] == lw]
                for key in hits:
                    c = prow.get(key)
                    if c is None:
                        continue
                    shift = key[1]
                    for (w, g), c2 in new.items():
                        _add_into(prow, (w, alg.gmul(g, shift)), -(c * c2))
            pivots[lw] = new
            order.append(lw)
        for lw in order:
            row = pivots[lw]
            rhs = {}
            for key, c in row.items():
                if key == (lw, alg.identity):
                    continue
                rhs[key] = -c
            self.rules[lw] = rhs
            for k in range(1, len(lw)):
                self._prefix.setdefault(lw[:k], []).append(lw)
            self.rule_degree_max = max(self.rule_degree_max, len(lw))
        self.normal[d] = sorted((c for c in candidates if c not in pivots), key=lambda w: w)
        self.done = d
        if order:
            self._invalidate(d)

    def _eliminate(self, row, pivots):
        if not pivots:
            return row
        alg = self.alg
        row = dict(row)
        changed = True
        while changed:
            changed = False
            for key in list(row):
                if key not in row:
                    continue
                w, g = key
                prow = pivots.get(w)
                if prow is None:
                    continue
                c = row[key]
                for (w2, g2), c2 in prow.items():
                    _add_into(row, (w2, alg.gmul(g2, g)), -(c * c2))
                changed = True
        return row

    # structure queries ----------------------------------------------------
    def normal_words(self, degree):
        self.complete(degree)
        return list(self.normal.get(degree, []))

    def is_finite_up_to(self, bound):
        """Complete until a degree with no normal words appears (or the bound)."""
        d = 0
        while d < bound:
            d += 1
            self.complete(d)
            if not self.normal[d]:
                return d
        return None

    def finish(self, bound):
        """Complete a finite system and check every remaining overlap.

        Returns the first degree without normal words.  Raises
        DegreeBoundTooSmall if normal words persist up to ``bound``.
        """
        top = self.is_finite_up_to(bound)
        if top is None:
            raise DegreeBoundTooSmall(f"normal words persist up to degree {bound}")
        last = 2 * self.rule_degree_max - 1
        self.complete(max(last, top))
        return top

    def normal_basis(self):
        words = []
        for d in sorted(self.normal):
            words.extend(self.normal[d])
        return words

    # PBW conversion -------------------------------------------------------------
    def _nf_super_letter(self, u):
        hit = self._super_nf.get(u)
        if hit is None:
            if len(u) == 1:
                hit = self.nf_word(u)
            else:
                v, w = shirshov_decompose(u)
                a, b = self._nf_super_letter(v), self._nf_super_letter(w)
                alg = self.alg
                qvw = alg.bichar(alg.degree(v), alg.degree(w))
                hit = self.nf_mul(a, b)
                for key, c in self.nf_mul(b, a).items():
                    _add_into(hit, key, -(c * qvw))
            self._super_nf[u] = hit
        return hit

    def nf_super_word(self, U):
        U = tuple(U)
        hit = self._sw_nf.get(U)
        if hit is None:
            if not U:
                hit = {((), self.alg.identity): CycloNumber.rational(1)}
            elif len(U) == 1:
                hit = self._nf_super_letter(U[0])
            else:
                hit = self.nf_mul(self._nf_super_letter(U[0]), self.nf_super_word(U[1:]))
            self._sw_nf[U] = hit
        return hit

    def to_pbw(self, terms):
        """Rewrite a normal-form term dict as a combination of PBW monomials."""
        alg = self.alg
        rem = dict(terms)
        out = {}
        steps = 0
        while rem:
            steps += 1
            if steps > STEP_CAP:
                raise ReductionDiverged("PBW conversion did not terminate")
            (w, g) = min(rem, key=lambda key: (_word_key(key[0]), key[1]))
            c = rem[(w, g)]
            U = lyndon_factorization(w)
            expansion = self.nf_super_word(U)
            lead = expansion.get((w, alg.identity))
            if lead is None:
                raise AssertionError(f"super word {U} does not lead with {w}")
            factor = c * _inverse(lead) if lead != 1 else c
            for (w2, g2), c2 in expansion.items():
                _add_into(rem, (w2, alg.gmul(g2, g)), -(factor * c2))
            _add_into(out, (U, g), _simplify(factor))
        return PBWElement(alg, out)

    # box ----------------------------------------------------------------------
    def box(self, max_length=None):
        """PBW monomials with exponents below the declared heights."""
        if self.L is None:
            raise InfiniteDimension("no PBW data declared")
        letters = sorted(self.L, reverse=True)
        heights = []
        for u in letters:
            n = self.heights.get(u)
            if n is None:
                if max_length is None:
                    raise InfiniteDimension(f"height of [{u}] is infinite")
                n = max_length // len(u) + 1
            heights.append(n)
        out = []
        for exps in _iproduct(*[range(n) for n in heights]):
            U = tuple(u for u, e in zip(letters, exps) for _ in range(e))
            if max_length is None or sum(len(u) for u in U) <= max_length:
                out.append(U)
        return out


# ---------------------------------------------------------------------------
# public operations


def _character_matches(alg, lhs_deg, word, grp):
    """Does the monomial x_word g carry the same Gamma-hat degree as lhs_deg?"""
    deg = alg.degree(word)
    if deg == lhs_deg:
        return True
    for j in range(1, alg.theta + 1):
        gj = alg.gen(j)
        if alg.char(gj, deg) != alg.char(gj, lhs_deg):
            return False
    # compare on every realization generator, not only on the g_j
    real = alg.realization
    for k in range(len(real.torsion)):
        e = tuple(1 if t == k else 0 for t in range(len(real.torsion)))
        if alg.char(e, deg) != alg.char(e, lhs_deg):
            return False
    return True


def orient(relations, L, q_or_alg, heights=None, name=""):
    """Validate the shape of every relation and build a RewriteSystem."""
    from .smash import SmashAlgebra

    alg = q_or_alg if hasattr(q_or_alg, "super_word") else SmashAlgebra(q_or_alg)
    free = RewriteSystem(alg, [])
    L = {tuple(u) for u in L}
    for rel in relations:
        lhs = rel.lhs
        for u in lhs:
            if not is_lyndon(u):
                raise NotPrecL(f"lhs factor {u} is not Lyndon")
        n = rel.degree
        lhs_deg = alg.degree(rel.lhs_word())
        pbw = free.to_pbw(dict(rel.rhs.terms))
        for (U, g), c in pbw.terms.items():
            length = sum(len(u) for u in U)
            if length > n:
                raise NotPrecL(f"{rel.label}: rhs term {format_super_word(U)} is longer than lhs")
            if length == n:
                if not all(u in L for u in U):
                    raise NotPrecL(f"{rel.label}: rhs super word {format_super_word(U)} leaves L")
                if not U > lhs:
                    raise NotPrecL(
                        f"{rel.label}: rhs super word {format_super_word(U)} is not lexicographically larger"
                    )
        for (w, g), c in rel.rhs.terms.items():
            if not _character_matches(alg, lhs_deg, w, g):
                raise NotCharacterHomogeneous(f"{rel.label}: term x{w} g{g} has a different character")
    return RewriteSystem(alg, relations, L=L, heights=heights, name=name)


def reduce(a, sys):
    """PBW normal form of ``a`` modulo the system."""
    sys.complete(max(a.max_length(), 0))
    sys._steps = 0
    return sys.to_pbw(sys.nf_terms(a.terms))


class ConfluenceReport:
    def __init__(self, bound, pairs, obstructions, missing, extra, rules):
        self.bound = bound
        self.pairs_checked = pairs
        self.obstructions = obstructions
        self.irreducible_outside_box = missing
        self.box_monomials_reducible = extra
        self.rule_count = rules

    @property
    def confluent(self):
        return not (self.obstructions or self.irreducible_outside_box or self.box_monomials_reducible)

    def failures(self):
        out = []
        for label, el in self.obstructions:
            out.append(f"overlap {label} leaves a lower-degree remainder {el}")
        for U in self.irreducible_outside_box:
            out.append(f"{format_super_word(U)} stays irreducible (no rule reaches it)")
        for U in self.box_monomials_reducible:
            out.append(f"{format_super_word(U)} in the declared basis is reducible")
        return out

    def to_dict(self):
        return {
            "degree_bound": self.bound,
            "confluent": self.confluent,
            "critical_pairs": self.pairs_checked,
            "rules": self.rule_count,
            "failures": self.failures(),
        }


def check_local_confluence(sys, degree_bound):
    """Resolve all overlaps up to ``degree_bound`` and compare with the declared PBW box."""
    sys.complete(degree_bound)
    missing, extra = [], []
    if sys.L is not None:
        found = set()
        for d in range(degree_bound + 1):
            for w in sys.normal.get(d, []):
                found.add(lyndon_factorization(w))
        declared = set(sys.box(max_length=degree_bound))
        missing = sorted(found - declared, key=lambda U: (sum(map(len, U)), U))
        extra = sorted(declared - found, key=lambda U: (sum(map(len, U)), U))
    return ConfluenceReport(
        degree_bound, sys.pairs_checked, list(sys.obstructions), missing, extra, len(sys.rules)
    )


class BasisResult:
    def __init__(self, monomials, group_order, declared_match, top_degree):
        self.monomials = monomials
        self.group_order = group_order
        self.declared_match = declared_match
        self.top_degree = top_degree

    @property
    def free_dimension(self):
        return len(self.monomials)

    @property
    def dimension(self):
        return len(self.monomials) * (self.group_order or 1)


def enumerate_pbw_basis(sys, bound=200, full=False):
    """PBW monomials labelling the normal words of a finite system.

    ``full`` additionally resolves every overlap of the final rules (needed
    for lifted systems, whose overlaps can leave lower-degree remainders).
    """
    for u, n in sys.heights.items():
        if n is None:
            raise InfiniteDimension(f"height of [{u}] is infinite")
    try:
        top = sys.finish(bound) if full else sys.is_finite_up_to(bound)
    except DegreeBoundTooSmall:
        raise InfiniteDimension(f"normal words persist up to degree {bound}") from None
    if top is None:
        raise InfiniteDimension(f"normal words persist up to degree {bound}")
    monos = [lyndon_factorization(w) for w in sys.normal_basis()]
    match = None
    if sys.L is not None:
        try:
            match = set(monos) == set(sys.box())
        except InfiniteDimension:
            match = False
    real = sys.alg.realization
    return BasisResult(monos, real.order if real.is_finite else None, match, top - 1)


# ---------------------------------------------------------------------------
# independent dimension oracle


def _rref_insert(basis, vec):
    """Reduce ``vec`` against ``basis`` (pivot -> row); insert if independent."""
    vec = _reduce_vec(basis, vec)
    if not vec:
        return False
    piv = min(vec)
    inv = vec[piv].inverse()
    row = {k: v * inv for k, v in vec.items()}
    for r in basis.values():
        c = r.get(piv)
        if c is not None:
            for k, v in row.items():
                _add_into(r, k, -(c * v))
    basis[piv] = row
    return True


def _reduce_vec(basis, vec):
    vec = dict(vec)
    for col in [c for c in vec if c in basis]:
        c = vec.get(col)
        if c is None:
            continue
        for k, v in basis[col].items():
            _add_into(vec, k, -(c * v))
    return vec


class _Level:
    """Degree-m piece A_m = (V (x) A_{m-1}) / K_m."""

    def __init__(self, kernel, cols):
        self.kernel = kernel
        self.cols = cols
        self.index = {c: n for n, c in enumerate(cols)}
        self.rho = {}

    def project(self, vec):
        red = _reduce_vec(self.kernel, vec)
        return {self.index[c]: v for c, v in red.items()}


class GradedQuotient:
    """T(V)/I for a homogeneous ideal, one degree at a time (no rewriting)."""

    def __init__(self, relations, theta):
        self.theta = theta
        self.rels = {}
        for r in relations:
            terms = r.terms if hasattr(r, "terms") else r
            vec = {}
            for key, c in terms.items():
                grouped = bool(key) and isinstance(key[0], tuple)
                w = key[0] if grouped else key
                if grouped and any(key[1]):
                    raise ValueError("oracle relations must be group-free")
                if isinstance(c, ParamScalar):
                    c = c.constant()
                _add_into(vec, tuple(w), c)
            if not vec:
                continue
            lengths = {len(w) for w in vec}
            if len(lengths) != 1:
                raise ValueError("oracle relations must be homogeneous")
            self.rels.setdefault(lengths.pop(), []).append(vec)
        self.levels = [None]
        self.dims = [1]
        self._pi = {(): {0: CycloNumber.rational(1)}}

    def image(self, w):
        """Class of the word ``w`` in A_len(w) as coordinates."""
        hit = self._pi.get(w)
        if hit is None:
            rest = self.image(w[1:])
            hit = self.levels[len(w)].project({(w[0], b): c for b, c in rest.items()})
            self._pi[w] = hit
        return hit

    def extend(self):
        m = len(self.levels)
        theta = self.theta
        kernel = {}
        for r in self.rels.get(m, ()):
            vec = {}
            for w, c in r.items():
                for b, cb in self.image(w[1:]).items():
                    _add_into(vec, (w[0], b), c * cb)
            if vec:
                _rref_insert(kernel, vec)
        if m >= 2:
            prev = self.levels[m - 1]
            for row in list(prev.kernel.values()):
                for j in range(1, theta + 1):
                    vec = {}
                    rho = prev.rho[j]
                    for (i, a), c in row.items():
                        for b, cb in rho[a].items():
                            _add_into(vec, (i, b), c * cb)
                    if vec:
                        _rref_insert(kernel, vec)
        cols = [(i, b) for i in range(1, theta + 1) for b in range(self.dims[m - 1])]
        level = _Level(kernel, [c for c in cols if c not in kernel])
        one = CycloNumber.rational(1)
        for j in range(1, theta + 1):
            if m == 1:
                level.rho[j] = [level.project({(j, 0): one})]
            else:
                prev_rho = self.levels[m - 1].rho[j]
                level.rho[j] = [
                    level.project({(i, b): cb for b, cb in prev_rho[a].items()})
                    for (i, a) in self.levels[m - 1].cols
                ]
        self.levels.append(level)
        self.dims.append(len(level.cols))
        return self.dims[-1]


def span_dimension_oracle(relations, q, degree_bound):
    """Graded dimensions of T(V)/(relations) by direct linear algebra.

    ``relations`` are homogeneous group-free elements (SmashElements or
    ``{word: coefficient}`` dicts) with numeric coefficients.  Returns
    ``[dim A_0, dim A_1, ...]`` up to the last nonzero degree.
    """
    theta = q.theta if hasattr(q, "theta") else int(q)
    gq = GradedQuotient(relations, theta)
    while True:
        if len(gq.levels) > degree_bound:
            raise DegreeBoundTooSmall(f"A_{degree_bound} is still nonzero")
        if gq.extend() == 0:
            return gq.dims[:-1]

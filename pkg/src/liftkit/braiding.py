"""Diagonal braidings: bicharacter, Cartan matrix, reflections, Dynkin diagrams."""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import permutations
from math import gcd

from .errors import IndexOutOfRange, NotFiniteOrder, OrbitNotFinite
from .scalars import CycloNumber, ParamScalar, as_scalar, multiplicative_order, q_number

__all__ = [
    "BraidingMatrix",
    "DynkinDiagram",
    "bicharacter",
    "word_degree",
    "cartan_matrix",
    "reflect",
    "dynkin",
    "twist_equivalent",
    "weyl_orbit",
]


class BraidingMatrix:
    """A theta x theta matrix of unit scalars q_ij = chi_j(g_i)."""

    __slots__ = ("theta", "entries", "_cache")

    def __init__(self, entries):
        rows = tuple(tuple(as_scalar(x) for x in row) for row in entries)
        theta = len(rows)
        if any(len(r) != theta for r in rows):
            raise ValueError("braiding matrix must be square")
        for row in rows:
            for x in row:
                if x.is_zero():
                    raise ValueError("braiding entries must be units")
        self.theta = theta
        self.entries = rows
        self._cache = {}

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i - 1][j - 1]

    def is_numeric(self):
        return all(x.is_constant() for row in self.entries for x in row)

    def numeric(self, i, j):
        x = self.entries[i - 1][j - 1]
        if not x.is_constant():
            raise NotFiniteOrder(f"q{i}{j} is symbolic")
        return x.constant()

    def root_order(self):
        """Order of the smallest cyclotomic field holding the numeric entries."""
        n = 1
        for row in self.entries:
            for x in row:
                for c in x.terms.values():
                    o = c.lowest().order
                    n = n * o // gcd(n, o)
        return n

    def subs(self, mapping):
        return BraidingMatrix([[x.subs(mapping) for x in row] for row in self.entries])

    def __eq__(self, other):
        return isinstance(other, BraidingMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def to_str(self, order=None):
        return "; ".join(", ".join(x.to_str(order) for x in row) for row in self.entries)

    def __repr__(self):
        return f"BraidingMatrix({self.to_str()})"


def word_degree(word, theta):
    """Letter-content multidegree of a word as a theta-tuple."""
    d = [0] * theta
    for i in word:
        d[i - 1] += 1
    return tuple(d)


def bicharacter(q, a, b):
    """prod_{i,j} q_ij^(a_i b_j)."""
    key = (tuple(a), tuple(b))
    hit = q._cache.get(key)
    if hit is not None:
        return hit
    out = ParamScalar.const(1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            if bj:
                out = out * (q.entries[i][j] ** (ai * bj))
    q._cache[key] = out
    return out


def _cap(q):
    n = q.root_order()
    return 2 * (n if n % 2 == 0 else 2 * n)


def cartan_matrix(q):
    """a_ij = -min{r : q_ij q_ji q_ii^r = 1 or (r+1)_{q_ii} = 0}."""
    theta = q.theta
    cap = _cap(q)
    one = CycloNumber.rational(1)
    a = [[0] * theta for _ in range(theta)]
    for i in range(1, theta + 1):
        qii = q.numeric(i, i)
        order = multiplicative_order(qii)
        if order is None or qii == one:
            raise NotFiniteOrder(f"q{i}{i} is not a root of unity different from 1")
        a[i - 1][i - 1] = 2
        for j in range(1, theta + 1):
            if i == j:
                continue
            prod = q.numeric(i, j) * q.numeric(j, i)
            for r in range(cap + 1):
                if prod * qii ** r == one or q_number(r + 1, qii).is_zero():
                    a[i - 1][j - 1] = -r
                    break
            else:
                raise NotFiniteOrder(f"no finite Cartan entry a_{i}{j} below the cap {cap}")
    return tuple(tuple(row) for row in a)


def reflect(q, k):
    """The reflected braiding at vertex ``k`` (1-based)."""
    theta = q.theta
    if not 1 <= k <= theta:
        raise IndexOutOfRange(f"vertex {k} outside 1..{theta}")
    a = cartan_matrix(q)
    rows = []
    for i in range(1, theta + 1):
        row = []
        for j in range(1, theta + 1):
            aki, akj = a[k - 1][i - 1], a[k - 1][j - 1]
            val = q[i, j] * q[i, k] ** (-akj) * q[k, j] ** (-aki) * q[k, k] ** (aki * akj)
            row.append(val)
        rows.append(row)
    return BraidingMatrix(rows)


@dataclass(frozen=True)
class DynkinDiagram:
    """Vertex labels q_ii and edge labels q_ij q_ji (edges with label 1 omitted).

    Stored in the canonical numbering that minimizes the sort key, so
    equality is isomorphism of labelled graphs.
    """

    vertices: tuple
    edges: tuple  # ((i, j), label) with i < j, 1-based

    def to_str(self, order=None):
        vs = ", ".join(v.to_str(order) for v in self.vertices)
        es = ", ".join(f"{i}-{j}: {lab.to_str(order)}" for (i, j), lab in self.edges)
        return f"vertices [{vs}] edges [{es}]"

    def __str__(self):
        return self.to_str()


def _diagram_key(vertices, edges):
    return (
        tuple(v.sort_key() for v in vertices),
        tuple((ij, lab.sort_key()) for ij, lab in edges),
    )


def dynkin(q):
    theta = q.theta
    one = CycloNumber.rational(1)
    verts = [q.numeric(i, i).lowest() for i in range(1, theta + 1)]
    labels = {}
    for i in range(1, theta + 1):
        for j in range(i + 1, theta + 1):
            lab = (q.numeric(i, j) * q.numeric(j, i)).lowest()
            if lab != one:
                labels[(i, j)] = lab
    best = None
    for perm in permutations(range(1, theta + 1)):
        # perm[new-1] = old vertex
        pos = {old: new for new, old in enumerate(perm, start=1)}
        vs = tuple(verts[old - 1] for old in perm)
        es = tuple(
            sorted(
                ((min(pos[i], pos[j]), max(pos[i], pos[j])), lab) for (i, j), lab in labels.items()
            )
        )
        key = _diagram_key(vs, es)
        if best is None or key < best[0]:
            best = (key, vs, es)
    return DynkinDiagram(best[1], best[2])


def twist_equivalent(q, q2):
    return q.theta == q2.theta and dynkin(q) == dynkin(q2)


def weyl_orbit(q, cap=1000):
    """Diagrams reachable from ``q`` by repeated vertex reflections."""
    seen = {dynkin(q): q}
    frontier = [q]
    steps = 0
    while frontier:
        nxt = []
        for m in frontier:
            for k in range(1, m.theta + 1):
                steps += 1
                if steps > cap:
                    raise OrbitNotFinite(f"more than {cap} reflections without closing")
                r = reflect(m, k)
                d = dynkin(r)
                if d not in seen:
                    seen[d] = r
                    nxt.append(r)
        frontier = nxt
    return set(seen)


def satisfies_cartan_condition(q, a=None):
    """q_ij q_ji = q_ii^(a_ij) or ord q_ii = 1 - a_ij, for all i != j."""
    if a is None:
        a = cartan_matrix(q)
    for i in range(1, q.theta + 1):
        for j in range(1, q.theta + 1):
            if i == j:
                continue
            aij = a[i - 1][j - 1]
            lhs = q.numeric(i, j) * q.numeric(j, i)
            if lhs != q.numeric(i, i) ** aij and multiplicative_order(q.numeric(i, i)) != 1 - aij:
                return False
    return True


def is_generalized_cartan(a):
    n = len(a)
    for i in range(n):
        if a[i][i] != 2:
            return False
        for j in range(n):
            if i != j and (a[i][j] > 0 or (a[i][j] == 0) != (a[j][i] == 0)):
                return False
    return True


def product_of(xs):
    return reduce(lambda s, t: s * t, xs, ParamScalar.const(1))

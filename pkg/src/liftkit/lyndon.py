"""Lyndon words, Shirshov decompositions and super words.

Words are tuples of letter indices starting at 1.  Python's tuple comparison
is exactly the order used throughout: a proper prefix is smaller than its
extensions, otherwise the first differing letter decides.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import EmptyWord, NotLyndon, NotLyndonInput, NotShirshovClosed, TooShort

__all__ = [
    "is_lyndon",
    "shirshov_decompose",
    "is_shirshov_closed",
    "shirshov_closure",
    "lyndon_words",
    "lyndon_factorization",
    "super_letter_expand",
    "cD_sets",
    "prec",
    "format_word",
    "format_super_word",
    "parse_word",
]


def _as_word(u):
    return tuple(u)


def is_lyndon(u):
    """True iff ``u`` is strictly smaller than each of its proper endings."""
    u = _as_word(u)
    if not u:
        raise EmptyWord("the empty word has no Lyndon status")
    return _is_lyndon(u)


@lru_cache(maxsize=None)
def _is_lyndon(u):
    return all(u < u[i:] for i in range(1, len(u)))


def shirshov_decompose(u):
    """Split ``u = v w`` where ``w`` is the lexicographically least proper ending."""
    u = _as_word(u)
    if len(u) < 2:
        raise TooShort("a decomposition needs at least two letters")
    return _shirshov(u)


@lru_cache(maxsize=None)
def _shirshov(u):
    cut = min(range(1, len(u)), key=lambda i: u[i:])
    return u[:cut], u[cut:]


def _letters_of(words, theta):
    if theta is None:
        theta = max((max(w) for w in words if w), default=0)
    return {(i,) for i in range(1, theta + 1)}


def _check_lyndon_set(words):
    for w in words:
        if not w or not _is_lyndon(w):
            raise NotLyndonInput(f"{format_word(w)} is not a Lyndon word")


def is_shirshov_closed(L, theta=None):
    words = {_as_word(w) for w in L}
    _check_lyndon_set(words)
    if not _letters_of(words, theta) <= words:
        return False
    for w in words:
        if len(w) > 1:
            v, t = _shirshov(w)
            if v not in words or t not in words:
                return False
    return True


def shirshov_closure(L, theta=None):
    words = {_as_word(w) for w in L}
    _check_lyndon_set(words)
    out = set(words) | _letters_of(words, theta)
    stack = list(out)
    while stack:
        w = stack.pop()
        if len(w) > 1:
            for part in _shirshov(w):
                if part not in out:
                    out.add(part)
                    stack.append(part)
    return out


def lyndon_words(theta, max_len):
    """All Lyndon words over 1..theta of length <= max_len, in lexicographic order."""
    out = []
    w = [0]
    while w:
        w[-1] += 1
        out.append(tuple(w))
        m = len(w)
        while len(w) < max_len:
            w.append(w[len(w) - m])
        while w and w[-1] == theta:
            w.pop()
    return out


def lyndon_factorization(w):
    """Factor ``w`` into a nonincreasing product of Lyndon words."""
    w = _as_word(w)
    out = []
    i, n = 0, len(w)
    while i < n:
        j, k = i + 1, i
        while j < n and w[k] <= w[j]:
            k = k + 1 if w[k] == w[j] else i
            j += 1
        while i <= k:
            out.append(w[i : i + j - k])
            i += j - k
    return tuple(out)


def super_letter_expand(u, algebra):
    """Expansion of ``[u]`` in the smash algebra ``algebra`` (a SmashAlgebra)."""
    u = _as_word(u)
    if not u:
        raise EmptyWord("empty super letter")
    if not _is_lyndon(u):
        raise NotLyndon(f"{format_word(u)} is not a Lyndon word")
    return algebra.super_letter(u)


def cD_sets(L, q, heights=None, theta=None):
    """The relation index sets of a Shirshov-closed ``L``.

    Returns ``(C, D)``: ``C`` is the set of words ``uv`` not in ``L`` with
    ``u, v`` in ``L``, ``u < v`` and ``(u, v)`` the Shirshov decomposition;
    ``D`` maps each ``u`` of finite height to that height.  Heights default to
    the multiplicative order of ``q_{u,u}``; ``heights`` overrides per word.
    """
    from .braiding import bicharacter, word_degree
    from .scalars import multiplicative_order

    words = {_as_word(w) for w in L}
    if theta is None:
        theta = q.theta if hasattr(q, "theta") else None
    if not is_shirshov_closed(words, theta):
        raise NotShirshovClosed("L must contain its letters and Shirshov factors")
    C = set()
    for u in words:
        for v in words:
            if u < v:
                w = u + v
                if w not in words and _shirshov(w) == (u, v):
                    C.add(w)
    D = {}
    heights = {(_as_word(k)): n for k, n in (heights or {}).items()}
    for u in words:
        if u in heights:
            n = heights[u]
        else:
            d = word_degree(u, q.theta)
            n = multiplicative_order(bicharacter(q, d, d))
        if n is not None:
            D[u] = n
    return C, D


def _super_key(U):
    return tuple(U)


def super_length(U):
    return sum(len(u) for u in U)


def prec(U, V):
    """Compare super words (tuples of Lyndon words): 'less', 'equal' or 'greater'.

    Shorter is smaller; at equal length the lexicographically LARGER super
    word is the smaller one.
    """
    U, V = tuple(map(tuple, U)), tuple(map(tuple, V))
    lu, lv = super_length(U), super_length(V)
    if lu != lv:
        return "less" if lu < lv else "greater"
    if U == V:
        return "equal"
    return "less" if U > V else "greater"


def format_word(w):
    return " ".join(f"x{i}" for i in w) if w else "1"


def format_super_word(U):
    parts = []
    i = 0
    U = list(U)
    while i < len(U):
        j = i
        while j < len(U) and U[j] == U[i]:
            j += 1
        u = U[i]
        base = f"x{u[0]}" if len(u) == 1 else f"[{format_word(u)}]"
        parts.append(base if j - i == 1 else f"{base}^{j - i}")
        i = j
    return " ".join(parts) if parts else "1"


def parse_word(text):
    """Read ``x1 x1 x2``, ``x1x1x2`` or ``112`` into a word tuple."""
    text = text.strip().strip("[]")
    if not text:
        return ()
    if "x" in text:
        items = [t for t in text.replace(" ", "").split("x") if t]
        return tuple(int(t) for t in items)
    return tuple(int(c) for c in text.replace(" ", ""))

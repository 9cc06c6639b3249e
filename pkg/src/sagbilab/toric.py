"""Toric ideals of integer exponent matrices.

The toric ideal of columns ``u_0, ..., u_{s-1}`` is the kernel of
``X_i -> x^{u_i}``.  It is computed by elimination: a Groebner basis of
``<X_i - x^{u_i}>`` under a block order with the x-block on top, intersected
with the X-ring.  Every polynomial met along the way is a pure difference
of two monomials, so the engine below stores binomials as exponent pairs
and reduces them by monomial rewriting.

The ideal is homogeneous for the grading ``deg x_j = 1``,
``deg X_i = |u_i|``; passing ``degree_bound`` stops Buchberger at that
degree and yields exactly the generators of degree <= bound.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import List, Optional, Tuple

from .algebra import Polynomial, lex
from .groebner import PairQueue, ResourceLimitError, gm_update, max_pairs_from_env

Exponent = Tuple[int, ...]


@dataclass(frozen=True)
class ExponentMatrix:
    """Integer matrix given by its columns, one exponent vector each."""

    columns: Tuple[Exponent, ...]

    def __init__(self, columns):
        cols = tuple(tuple(int(x) for x in c) for c in columns)
        if not cols:
            raise ValueError("an exponent matrix needs at least one column")
        n = len(cols[0])
        if any(len(c) != n for c in cols):
            raise ValueError("all columns must have the same length")
        if any(x < 0 for c in cols for x in c):
            raise ValueError("exponent matrix entries must be non-negative")
        object.__setattr__(self, "columns", cols)

    @property
    def n(self):
        return len(self.columns[0])

    @property
    def s(self):
        return len(self.columns)

    def image(self, alpha):
        return tuple(sum(a * c[j] for a, c in zip(alpha, self.columns)) for j in range(self.n))

    def rows(self):
        return [tuple(c[j] for c in self.columns) for j in range(self.n)]


def relation_vars(s, prefix="X"):
    return tuple(f"{prefix}{i}" for i in range(s))


@dataclass(frozen=True)
class BinomialIdeal:
    """Generators ``X^alpha - X^beta`` of a toric ideal.

    ``complete`` is False when the computation was cut at ``degree_bound``;
    the generators then span only the part of the ideal up to that degree.
    """

    matrix: ExponentMatrix
    vars: Tuple[str, ...]
    pairs: Tuple[Tuple[Exponent, Exponent], ...]
    complete: bool = True
    degree_bound: Optional[int] = None
    stats: dict = field(default_factory=dict, compare=False)

    @property
    def generators(self) -> List[Polynomial]:
        return [binomial(self.vars, a, b) for a, b in self.pairs]

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.generators)

    def degree(self, pair):
        a = pair[0]
        return sum(k * sum(c) for k, c in zip(a, self.matrix.columns))


def binomial(vars, alpha, beta):
    return Polynomial(vars, {tuple(alpha): 1}) - Polynomial(vars, {tuple(beta): 1})


def _divides(a, b):
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


class _BinomialEngine:
    def __init__(self, A: ExponentMatrix):
        self.n = A.n
        self.s = A.s
        self.weights = (1,) * self.n + tuple(sum(c) for c in A.columns)
        self.leads: List[Exponent] = []
        self.tails: List[Exponent] = []
        self._keys = {}

    def key(self, e):
        k = self._keys.get(e)
        if k is None:
            n = self.n
            x, X = e[:n], e[n:]
            # block order: grevlex on x above grevlex on X
            k = ((sum(x),) + tuple(-v for v in reversed(x)), (sum(X),) + tuple(-v for v in reversed(X)))
            self._keys[e] = k
        return k

    def weight(self, e):
        return sum(w * v for w, v in zip(self.weights, e))

    def add(self, a, b):
        if self.key(a) < self.key(b):
            a, b = b, a
        self.leads.append(a)
        self.tails.append(b)
        return len(self.leads) - 1

    def normal_form(self, m, active):
        leads, tails = self.leads, self.tails
        changed = True
        while changed:
            changed = False
            for i in active:
                le = leads[i]
                if _divides(le, m):
                    m = tuple(x - y + z for x, y, z in zip(m, le, tails[i]))
                    changed = True
                    break
        return m

    def spair(self, i, j):
        li, lj = self.leads[i], self.leads[j]
        L = tuple(max(x, y) for x, y in zip(li, lj))
        a = tuple(x - y + z for x, y, z in zip(L, li, self.tails[i]))
        b = tuple(x - y + z for x, y, z in zip(L, lj, self.tails[j]))
        return a, b


def toric_ideal(A, degree_bound=None, max_pairs=None) -> BinomialIdeal:
    """Generators of the toric ideal of ``A`` (columns = exponent vectors).

    Each generator is written ``X^alpha - X^beta`` with disjoint supports and
    the lex-larger side (X0 > X1 > ...) first.  Generators are sorted by
    degree, then by the leading side, lex-larger first.
    """
    if not isinstance(A, ExponentMatrix):
        A = ExponentMatrix(A)
    max_pairs = max_pairs or max_pairs_from_env()
    eng = _BinomialEngine(A)
    n, s = A.n, A.s
    complete = True
    G: List[int] = []

    def pair_key(p):
        L = tuple(max(x, y) for x, y in zip(eng.leads[p[0]], eng.leads[p[1]]))
        return (eng.weight(L), eng.key(L), p)

    queue = PairQueue(pair_key)
    start = []
    for i, u in enumerate(A.columns):
        X = [0] * s
        X[i] = 1
        start.append((tuple(u) + (0,) * s, (0,) * n + tuple(X)))
    start.sort(key=lambda ab: (eng.weight(ab[0]), max(eng.key(ab[0]), eng.key(ab[1]))))
    for a, b in start:
        if degree_bound is not None and eng.weight(a) > degree_bound:
            complete = False
            continue
        a, b = eng.normal_form(a, G), eng.normal_form(b, G)
        if a == b:
            continue
        h = eng.add(a, b)
        G, B = gm_update(eng.leads, G, queue.pairs(), h)
        queue.replace(B)

    processed = 0
    while queue:
        if len(queue) > max_pairs:
            raise ResourceLimitError(f"pair queue exceeded {max_pairs} pairs")
        i, j = queue.pop()
        processed += 1
        a, b = eng.spair(i, j)
        if degree_bound is not None and eng.weight(a) > degree_bound:
            complete = False
            continue
        a, b = eng.normal_form(a, G), eng.normal_form(b, G)
        if a == b:
            continue
        h = eng.add(a, b)
        G, B = gm_update(eng.leads, G, queue.pairs(), h)
        queue.replace(B)

    # minimalize and tail-reduce, keep the X-only part
    G = sorted(G, key=lambda i: eng.key(eng.leads[i]))
    minimal = []
    for i in G:
        if any(_divides(eng.leads[j], eng.leads[i]) for j in minimal):
            continue
        minimal.append(i)
    pairs = set()
    for i in minimal:
        lead = eng.leads[i]
        if any(lead[:n]):
            continue
        tail = eng.normal_form(eng.tails[i], minimal)
        alpha, beta = lead[n:], tail[n:]
        common = tuple(min(x, y) for x, y in zip(alpha, beta))
        alpha = tuple(x - c for x, c in zip(alpha, common))
        beta = tuple(x - c for x, c in zip(beta, common))
        if alpha == beta:
            continue
        if alpha < beta:  # lex with X0 most significant
            alpha, beta = beta, alpha
        pairs.add((alpha, beta))
    ordered = sorted(
        pairs, key=lambda ab: (sum(k * sum(c) for k, c in zip(ab[0], A.columns)), tuple(-x for x in ab[0]), ab[1])
    )
    return BinomialIdeal(
        A,
        relation_vars(s),
        tuple(ordered),
        complete=complete,
        degree_bound=degree_bound,
        stats={"pairs": processed, "basis": len(minimal)},
    )


def format_binomial(pair, vars):
    from .algebra import format_poly

    return format_poly(binomial(vars, *pair), lex(len(vars)))


def kernel_lattice(A) -> List[Tuple[int, ...]]:
    """A basis of the integer kernel ``{v in Z^s : A v = 0}``.

    Integer row reduction of ``[A^T | I]``: rows whose left part vanishes
    span the kernel lattice (the transformation is unimodular).
    """
    if not isinstance(A, ExponentMatrix):
        A = ExponentMatrix(A)
    n, s = A.n, A.s
    rows = [list(A.columns[i]) + [1 if j == i else 0 for j in range(s)] for i in range(s)]
    r = 0
    for col in range(n):
        # gcd-style elimination below row r in this column
        while True:
            nz = [i for i in range(r, s) if rows[i][col] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(rows[i][col]))
            rows[r], rows[p] = rows[p], rows[r]
            done = True
            for i in range(r + 1, s):
                if rows[i][col]:
                    q = rows[i][col] // rows[r][col]
                    rows[i] = [a - q * b for a, b in zip(rows[i], rows[r])]
                    if rows[i][col]:
                        done = False
            if done:
                r += 1
                break
        if r == s:
            break
    basis = []
    for row in rows[r:]:
        v = row[n:]
        g = 0
        for x in v:
            g = gcd(g, x)
        if g > 1:
            v = [x // g for x in v]
        first = next(x for x in v if x)
        if first < 0:
            v = [-x for x in v]
        basis.append(tuple(v))
    return basis

"""Buchberger's algorithm with exact rational arithmetic.

Pairs are selected by the normal strategy (smallest lcm first, degree then
order) and pruned with the Gebauer-Moeller criteria, which include
Buchberger's coprime criterion.  The result is always the reduced basis,
sorted by ascending leading exponent, so it is unique for a given ideal and
order.
"""

from __future__ import annotations

import heapq
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from .algebra import MonomialOrder, Polynomial, RingMismatchError

DEFAULT_MAX_PAIRS = 100_000


class ResourceLimitError(RuntimeError):
    pass


def max_pairs_from_env():
    value = os.environ.get("SAGBI_MAX_PAIRS")
    if not value:
        return DEFAULT_MAX_PAIRS
    try:
        n = int(value)
    except ValueError:
        raise ValueError(f"SAGBI_MAX_PAIRS must be an integer, got {value!r}") from None
    if n <= 0:
        raise ValueError("SAGBI_MAX_PAIRS must be positive")
    return n


@dataclass(frozen=True)
class Ideal:
    vars: Tuple[str, ...]
    generators: Tuple[Polynomial, ...]

    def __init__(self, generators: Sequence[Polynomial], vars=None):
        gens = tuple(g for g in generators if g)
        if vars is None:
            if not gens:
                raise ValueError("an ideal without generators needs an explicit ring")
            vars = gens[0].vars
        vars = tuple(vars)
        for g in gens:
            if g.vars != vars:
                raise RingMismatchError(f"generator ring {g.vars} differs from {vars}")
        object.__setattr__(self, "vars", vars)
        object.__setattr__(self, "generators", gens)


@dataclass(frozen=True)
class GroebnerBasis:
    order: MonomialOrder
    elements: Tuple[Polynomial, ...]

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def leading_exponents(self):
        return [g.leading_exponent(self.order) for g in self.elements]

    def reduce(self, f):
        return divide(f, self.elements, self.order)[1]

    def contains(self, f):
        return not self.reduce(f)


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def divide(f: Polynomial, G: Sequence[Polynomial], order: MonomialOrder):
    """Multivariate division of ``f`` by the list ``G``.

    Returns ``(quotients, remainder)`` with ``f = sum(q*g) + r`` and no term
    of ``r`` divisible by a leading exponent of ``G``.  The first divisor in
    list order is used.
    """
    G = list(G)
    if not G:
        raise ValueError("division needs at least one divisor")
    for g in G:
        if not g:
            raise ValueError("cannot divide by the zero polynomial")
        if g.vars != f.vars:
            raise RingMismatchError("divisor ring differs from dividend ring")
    vars = f.vars
    leads = [g.leading_exponent(order) for g in G]
    lcs = [g.terms[e] for g, e in zip(G, leads)]
    quotients = [dict() for _ in G]
    remainder = {}
    p = dict(f.terms)
    key = order.key
    while p:
        e = max(p, key=key)
        c = p[e]
        for i, le in enumerate(leads):
            if _divides(le, e):
                m = _sub(e, le)
                q = c / lcs[i]
                quotients[i][m] = quotients[i].get(m, 0) + q
                for ge, gc in G[i].terms.items():
                    t = tuple(x + y for x, y in zip(ge, m))
                    v = p.get(t, 0) - q * gc
                    if v:
                        p[t] = v
                    else:
                        p.pop(t, None)
                break
        else:
            remainder[e] = c
            del p[e]
    qs = [Polynomial(vars, q) for q in quotients]
    return qs, Polynomial._raw(vars, remainder)


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    ef, eg = f.leading_exponent(order), g.leading_exponent(order)
    L = _lcm(ef, eg)
    cf, cg = f.terms[ef], g.terms[eg]
    return f.mul_term(1 / cf, _sub(L, ef)) - g.mul_term(1 / cg, _sub(L, eg))


class _Reducer:
    """Working set for Buchberger: polynomials stored as term dicts."""

    def __init__(self, order):
        self.order = order
        self.polys = []  # list of dicts, monic
        self.leads = []

    def add(self, terms):
        lead = max(terms, key=self.order.key)
        c = terms[lead]
        if c != 1:
            terms = {e: v / c for e, v in terms.items()}
        self.polys.append(terms)
        self.leads.append(lead)
        return len(self.polys) - 1

    def normal_form(self, terms, active):
        """Full reduction of ``terms`` modulo the polynomials in ``active``."""
        key = self.order.key
        p = dict(terms)
        out = {}
        leads = [(self.leads[i], i) for i in active]
        while p:
            e = max(p, key=key)
            c = p[e]
            for le, i in leads:
                if _divides(le, e):
                    m = _sub(e, le)
                    for ge, gc in self.polys[i].items():
                        t = tuple(x + y for x, y in zip(ge, m))
                        v = p.get(t, 0) - c * gc
                        if v:
                            p[t] = v
                        else:
                            p.pop(t, None)
                    break
            else:
                out[e] = c
                del p[e]
        return out

    def spoly(self, i, j):
        a, b = self.polys[i], self.polys[j]
        la, lb = self.leads[i], self.leads[j]
        L = _lcm(la, lb)
        ma, mb = _sub(L, la), _sub(L, lb)
        out = {}
        for e, c in a.items():
            out[tuple(x + y for x, y in zip(e, ma))] = c
        for e, c in b.items():
            t = tuple(x + y for x, y in zip(e, mb))
            v = out.get(t, 0) - c
            if v:
                out[t] = v
            else:
                out.pop(t, None)
        return out


def gm_update(leads, G, B, h):
    """Gebauer-Moeller update: new pair list and basis after adding ``h``.

    ``leads`` maps element index to leading exponent; ``G`` and ``B`` are the
    current basis indices and pending pairs.
    """
    lh = leads[h]
    lcm_h = {g: _lcm(lh, leads[g]) for g in G}
    coprime = {g: not any(x and y for x, y in zip(lh, leads[g])) for g in G}

    C = list(G)
    D = []
    for pos, g1 in enumerate(C):
        if coprime[g1]:
            D.append(g1)
            continue
        l1 = lcm_h[g1]
        rest = C[pos + 1:]
        if not any(_divides(lcm_h[g2], l1) for g2 in rest) and not any(
            _divides(lcm_h[g2], l1) for g2 in D
        ):
            D.append(g1)
    E = [g for g in D if not coprime[g]]
    B_new = []
    for (g1, g2) in B:
        l12 = _lcm(leads[g1], leads[g2])
        if _divides(lh, l12) and lcm_h.get(g1, l12) != l12 and lcm_h.get(g2, l12) != l12:
            continue
        B_new.append((g1, g2))
    B_new.extend((g, h) for g in E)
    G_new = [g for g in G if not _divides(lh, leads[g])]
    G_new.append(h)
    return G_new, B_new


class PairQueue:
    """Pending pairs ordered by a cached key; smallest key pops first."""

    def __init__(self, keyfunc):
        self.keyfunc = keyfunc
        self.keys = {}
        self.heap = []

    def replace(self, pairs):
        keys = self.keys
        heap = []
        for p in pairs:
            k = keys.get(p)
            if k is None:
                k = keys[p] = self.keyfunc(p)
            heap.append((k, p))
        heapq.heapify(heap)
        self.heap = heap

    def pairs(self):
        return [p for _, p in self.heap]

    def pop(self):
        return heapq.heappop(self.heap)[1]

    def __len__(self):
        return len(self.heap)


def buchberger(ideal, order: MonomialOrder, max_pairs=None) -> GroebnerBasis:
    """Reduced Groebner basis of ``ideal`` (an :class:`Ideal` or a list)."""
    if not isinstance(ideal, Ideal):
        ideal = Ideal(list(ideal))
    if order.nvars != len(ideal.vars):
        raise ValueError("order size does not match the ring")
    max_pairs = max_pairs or max_pairs_from_env()
    red = _Reducer(order)
    key = order.key
    G: List[int] = []

    def pair_key(p):
        L = _lcm(red.leads[p[0]], red.leads[p[1]])
        return (sum(L), key(L), p)

    queue = PairQueue(pair_key)
    gens = sorted(ideal.generators, key=lambda g: key(g.leading_exponent(order)))
    for g in gens:
        nf = red.normal_form(g.terms, G)
        if not nf:
            continue
        h = red.add(nf)
        G, B = gm_update(red.leads, G, queue.pairs(), h)
        queue.replace(B)

    while queue:
        if len(queue) > max_pairs:
            raise ResourceLimitError(f"pair queue exceeded {max_pairs} pairs")
        i, j = queue.pop()
        s = red.spoly(i, j)
        if not s:
            continue
        # the GM-pruned set G spans the same leading monomial ideal
        nf = red.normal_form(s, G)
        if not nf:
            continue
        h = red.add(nf)
        G, B = gm_update(red.leads, G, queue.pairs(), h)
        queue.replace(B)
    basis = [Polynomial._raw(ideal.vars, red.polys[i]) for i in G]
    return reduce_basis(basis, order)


def reduce_basis(G: Sequence[Polynomial], order: MonomialOrder) -> GroebnerBasis:
    """Minimalize and inter-reduce a Groebner basis; elements become monic."""
    key = order.key
    polys = [g.monic(order) for g in G if g]
    polys.sort(key=lambda g: key(g.leading_exponent(order)))
    minimal = []
    for g in polys:
        lg = g.leading_exponent(order)
        if any(_divides(h.leading_exponent(order), lg) for h in minimal):
            continue
        minimal = [h for h in minimal if not _divides(lg, h.leading_exponent(order))]
        minimal.append(g)
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        lead = g.leading_exponent(order)
        tail = Polynomial._raw(g.vars, {e: c for e, c in g.terms.items() if e != lead})
        if others and tail:
            tail = divide(tail, others, order)[1]
        reduced.append(tail + Polynomial._raw(g.vars, {lead: Fraction(1)}))
    reduced.sort(key=lambda g: key(g.leading_exponent(order)))
    return GroebnerBasis(order, tuple(reduced))


def is_groebner(G: Sequence[Polynomial], order: MonomialOrder) -> bool:
    """Check Buchberger's criterion: every S-polynomial reduces to zero."""
    G = [g for g in G if g]
    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            if divide(s_polynomial(G[i], G[j], order), G, order)[1]:
                return False
    return True

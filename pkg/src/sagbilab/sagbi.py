"""Subduction, the SAGBI criterion and degree-truncated SAGBI completion."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import MonomialOrder, Polynomial, RingMismatchError, grevlex, is_homogeneous, substitute
from .groebner import ResourceLimitError
from .toric import BinomialIdeal, binomial, toric_ideal

Exponent = Tuple[int, ...]

FINITE = "Finite"
TRUNCATED = "Truncated"


class Representer:
    """Solves ``e = sum i_j * initials[j]`` over the non-negative integers.

    Feasibility of every (start index, residual) state is memoized, so one
    instance can serve a whole subduction run.
    """

    def __init__(self, initials: Sequence[Exponent]):
        self.initials = [tuple(u) for u in initials]
        self.n = len(self.initials[0]) if self.initials else 0
        k = len(self.initials)
        # coordinates that some initial at index >= j can still lower
        self.reach = [None] * (k + 1)
        acc = set()
        self.reach[k] = frozenset()
        for j in range(k - 1, -1, -1):
            acc |= {c for c, x in enumerate(self.initials[j]) if x}
            self.reach[j] = frozenset(acc)
        self.memo: Dict[Tuple[int, Exponent], bool] = {}

    def feasible(self, j, rem):
        if not any(rem):
            return True
        if j == len(self.initials):
            return False
        key = (j, rem)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        reach = self.reach[j]
        if any(x and c not in reach for c, x in enumerate(rem)):
            self.memo[key] = False
            return False
        u = self.initials[j]
        ok = False
        if any(u):
            top = min(r // x for r, x in zip(rem, u) if x)
            cur = rem
            for _ in range(top + 1):
                if self.feasible(j + 1, cur):
                    ok = True
                    break
                cur = tuple(r - x for r, x in zip(cur, u))
        else:
            ok = self.feasible(j + 1, rem)
        self.memo[key] = ok
        return ok

    def solve(self, e) -> Optional[Tuple[int, ...]]:
        e = tuple(e)
        if len(e) != self.n and self.initials:
            raise ValueError("exponent length does not match the initials")
        if not self.feasible(0, e):
            return None
        out = []
        rem = e
        for j, u in enumerate(self.initials):
            if not any(u):
                out.append(0)
                continue
            i = 0
            while not self.feasible(j + 1, rem):
                rem = tuple(r - x for r, x in zip(rem, u))
                i += 1
            out.append(i)
        return tuple(out)


def find_initial_representation(e, initials) -> Optional[Tuple[int, ...]]:
    """Lexicographically smallest ``(i_1, ..., i_s)`` with ``sum i_j u_j = e``.

    Returns None when ``e`` is not in the monoid spanned by ``initials``.
    """
    if not initials:
        return () if not any(e) else None
    return Representer(initials).solve(e)


class GeneratorSet:
    """Non-zero polynomials in a common ring, stored monic, with an order."""

    def __init__(self, gens: Sequence[Polynomial], order: Optional[MonomialOrder] = None, vars=None):
        gens = list(gens)
        if vars is None:
            if not gens:
                raise ValueError("an empty generator set needs an explicit ring")
            vars = gens[0].vars
        self.vars = tuple(vars)
        self.order = order or grevlex(len(self.vars))
        if self.order.nvars != len(self.vars):
            raise ValueError("order size does not match the ring")
        out = []
        for g in gens:
            if g.vars != self.vars:
                raise RingMismatchError(f"generator ring {g.vars} differs from {self.vars}")
            if not g:
                raise ValueError("generators must be non-zero")
            out.append(g.monic(self.order))
        self.gens: Tuple[Polynomial, ...] = tuple(out)
        self.initials: Tuple[Exponent, ...] = tuple(g.leading_exponent(self.order) for g in out)
        self._representer = None
        self._powers: Dict[Tuple[int, int], Polynomial] = {}
        self._products: Dict[Tuple[int, ...], Polynomial] = {}

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __repr__(self):
        return f"GeneratorSet({[str(g) for g in self.gens]!r})"

    @property
    def representer(self):
        if self._representer is None:
            self._representer = Representer(self.initials)
        return self._representer

    def power(self, j, k):
        key = (j, k)
        p = self._powers.get(key)
        if p is None:
            if k == 0:
                p = Polynomial.constant(self.vars, 1)
            elif k == 1:
                p = self.gens[j]
            else:
                p = self.power(j, k // 2) * self.power(j, k - k // 2)
            self._powers[key] = p
        return p

    def product(self, exps):
        exps = tuple(exps)
        p = self._products.get(exps)
        if p is None:
            p = Polynomial.constant(self.vars, 1)
            for j, k in enumerate(exps):
                if k:
                    p = p * self.power(j, k)
            if len(self._products) < 20_000:
                self._products[exps] = p
        return p

    def with_gens(self, gens):
        return GeneratorSet(gens, self.order, self.vars)


@dataclass
class SubductionResult:
    """``f = q + r + c``; ``expression`` lists ``(coefficient, exponents)``
    with ``q = sum coefficient * prod f_j^exponents_j``."""

    q: Polynomial
    r: Polynomial
    c: Fraction
    expression: List[Tuple[Fraction, Tuple[int, ...]]] = field(default_factory=list)
    trace: List[Exponent] = field(default_factory=list)

    @property
    def subduces_to_constant(self):
        return not self.r


def subduct(f: Polynomial, F: GeneratorSet) -> SubductionResult:
    """Run the subduction loop of ``f`` against ``F``.

    While the working polynomial is not constant, its initial term is either
    cancelled by a scalar multiple of a product of generators whose initial
    exponents sum to it, or moved to the remainder.
    """
    if f.vars != F.vars:
        raise RingMismatchError("polynomial ring differs from generator ring")
    order = F.order
    key = order.key
    zero_exp = (0,) * len(F.vars)
    rep = F.representer if F.gens else None
    p = dict(f.terms)
    q: Dict[Exponent, Fraction] = {}
    r: Dict[Exponent, Fraction] = {}
    expression = []
    trace = []
    last = None
    while p and not (len(p) == 1 and zero_exp in p):
        e = max(p, key=key)
        if last is not None:
            assert key(e) < key(last), "subduction degree did not strictly decrease"
        last = e
        trace.append(e)
        c = p[e]
        exps = rep.solve(e) if rep is not None else None
        if exps is not None:
            prod = F.product(exps)
            # generators are monic, so the product's leading coefficient is 1
            expression.append((c, exps))
            for te, tc in prod.terms.items():
                v = tc * c
                s = q.get(te, 0) + v
                if s:
                    q[te] = s
                else:
                    q.pop(te, None)
                s = p.get(te, 0) - v
                if s:
                    p[te] = s
                else:
                    p.pop(te, None)
        else:
            r[e] = c
            del p[e]
    const = p.get(zero_exp, Fraction(0))
    return SubductionResult(
        Polynomial._raw(F.vars, q), Polynomial._raw(F.vars, r), const, expression, trace
    )


# ---------------------------------------------------------------------------
# the criterion


@dataclass
class SagbiCheck:
    """Outcome of the toric-relation criterion.

    When ``is_sagbi`` holds, ``certificate`` lists every relation with the
    constant its evaluation subduces to.  Otherwise ``witness`` is the first
    relation (in ascending degree) whose evaluation leaves the non-zero
    subduction remainder ``witness_remainder``.
    """

    is_sagbi: bool
    relations: BinomialIdeal
    certificate: List[Tuple[Polynomial, Fraction]] = field(default_factory=list)
    witness: Optional[Polynomial] = None
    witness_remainder: Optional[Polynomial] = None
    remainders: List[Tuple[Polynomial, Polynomial]] = field(default_factory=list)

    def __bool__(self):
        return self.is_sagbi


def evaluate_relation(pair, F: GeneratorSet) -> Polynomial:
    """The tete-a-tete ``prod f^alpha - prod f^beta``."""
    alpha, beta = pair
    return F.product(alpha) - F.product(beta)


def evaluate_by_substitution(relation: Polynomial, F: GeneratorSet) -> Polynomial:
    return substitute(relation, dict(zip(relation.vars, F.gens)), F.vars)


def sagbi_check(F: GeneratorSet, exhaustive=False, max_pairs=None, relations=None) -> SagbiCheck:
    """Decide whether ``F`` is a SAGBI basis of the algebra it generates.

    The toric ideal of the initial exponents is computed, each generator is
    evaluated at ``F`` and subduced; ``F`` is a SAGBI basis exactly when all
    of them subduce to constants.  Stops at the first failure unless
    ``exhaustive``.
    """
    if relations is None:
        relations = toric_ideal(F.initials, max_pairs=max_pairs) if F.gens else None
    if relations is None or not relations.pairs:
        return SagbiCheck(True, relations)
    check = SagbiCheck(True, relations)
    for pair in relations.pairs:
        tete = evaluate_relation(pair, F)
        res = subduct(tete, F)
        rel = binomial(relations.vars, *pair)
        if res.r:
            check.remainders.append((rel, res.r))
            if check.is_sagbi:
                check.is_sagbi = False
                check.witness = rel
                check.witness_remainder = res.r
            if not exhaustive:
                break
        else:
            check.certificate.append((rel, res.c))
    if not check.is_sagbi:
        check.certificate = []
    return check


# ---------------------------------------------------------------------------
# completion


@dataclass
class SagbiReport:
    status: str
    basis: List[Polynomial]
    order: MonomialOrder
    max_degree: int
    max_degree_reached: int
    rounds: int
    certificate: Optional[List[Tuple[Polynomial, Fraction]]] = None
    witness: Optional[Polynomial] = None
    witness_remainder: Optional[Polynomial] = None
    history: List[List[Exponent]] = field(default_factory=list)

    @property
    def initial_exponents(self):
        return [g.leading_exponent(self.order) for g in self.basis]

    @property
    def is_finite(self):
        return self.status == FINITE

    def generator_set(self):
        return GeneratorSet(self.basis, self.order, self.basis[0].vars if self.basis else None)


def _sorted_by_initial(polys, order):
    return sorted(polys, key=lambda g: order.key(g.leading_exponent(order)))


def interreduce(F: GeneratorSet) -> GeneratorSet:
    """Replace generators by subduction remainders against the others.

    The generated algebra is unchanged (``f = q + r + c`` with ``q`` in the
    algebra of the others), and afterwards no initial exponent is
    representable by the remaining ones.
    """
    order = F.order
    current = list(F.gens)
    for _ in range(100):
        kept: List[Polynomial] = []
        for f in _sorted_by_initial(current, order):
            r = subduct(f, F.with_gens(kept)).r if kept else f - f.constant_value()
            if r:
                kept.append(r.monic(order))
        kept = _sorted_by_initial(kept, order)
        if kept == current:
            break
        current = kept
    return F.with_gens(current)


def sagbi_construct(F0: GeneratorSet, max_degree: int, max_pairs=None, certify=True) -> SagbiReport:
    """Complete ``F0`` towards a SAGBI basis, adjoining generators of total
    degree at most ``max_degree``.

    Each round subduces all current tete-a-tetes in ascending order of
    their initial exponents and adjoins the monic remainders.  For
    homogeneous input only relations up to ``max_degree`` are computed.
    When nothing new appears the full criterion is run: success gives status
    Finite, anything else Truncated.
    """
    order = F0.order
    if F0.gens and max_degree < max(g.total_degree() for g in F0.gens):
        raise ValueError("max_degree must be at least the largest generator degree")
    F = interreduce(F0)
    homogeneous = all(is_homogeneous(g) is not None for g in F.gens)
    history = [list(F.initials)]
    rounds = 0
    while True:
        rounds += 1
        if not F.gens:
            break
        bound = max_degree if homogeneous else None
        relations = toric_ideal(F.initials, degree_bound=bound, max_pairs=max_pairs)
        tetes = []
        for pair in relations.pairs:
            t = evaluate_relation(pair, F)
            if t:
                tetes.append(t)
        tetes = _sorted_by_initial(tetes, order)
        remainders = [r for r in (subduct(t, F).r for t in tetes) if r]
        small = [r for r in remainders if r.total_degree() <= max_degree]
        added = []
        gens = list(F.gens)
        for r in _sorted_by_initial(small, order):
            r = subduct(r, F.with_gens(gens)).r
            if r:
                r = r.monic(order)
                gens.append(r)
                added.append(r.leading_exponent(order))
        if added:
            # a late generator can make an earlier one redundant
            F = interreduce(F.with_gens(gens))
            history.append(added)
            continue
        if remainders:
            return _report(TRUNCATED, F, max_degree, rounds, history, remainders[0])
        break
    if not certify:
        return _report(TRUNCATED, F, max_degree, rounds, history)
    try:
        check = sagbi_check(F, max_pairs=max_pairs)
    except ResourceLimitError:
        return _report(TRUNCATED, F, max_degree, rounds, history)
    if check.is_sagbi:
        F = autoreduce(F)
        return _report(FINITE, F, max_degree, rounds, history, certificate=check.certificate)
    return _report(TRUNCATED, F, max_degree, rounds, history, check.witness_remainder, check.witness)


def _report(status, F, max_degree, rounds, history, remainder=None, witness=None, certificate=None):
    basis = _sorted_by_initial(F.gens, F.order)
    if status == FINITE:
        reached = max((g.total_degree() for g in basis), default=0)
    else:
        reached = max_degree
    return SagbiReport(
        status=status,
        basis=basis,
        order=F.order,
        max_degree=max_degree,
        max_degree_reached=reached,
        rounds=rounds,
        certificate=certificate,
        witness=witness,
        witness_remainder=remainder,
        history=history,
    )


def autoreduce(F: GeneratorSet) -> GeneratorSet:
    """Normalize a SAGBI basis: drop generators with representable initial
    exponents, make the rest monic and subduce their tails against the
    others until nothing changes.

    Dropping is only algebra-preserving for a SAGBI basis; use
    :func:`interreduce` on arbitrary generating sets.
    """
    order = F.order
    kept: List[Polynomial] = []
    for g in _sorted_by_initial(F.gens, order):
        e = g.leading_exponent(order)
        if kept and find_initial_representation(e, [h.leading_exponent(order) for h in kept]) is not None:
            continue
        kept.append(g.monic(order))
    for _ in range(100):
        changed = False
        for i, g in enumerate(kept):
            others = kept[:i] + kept[i + 1:]
            lead = g.leading_exponent(order)
            tail = g - Polynomial.monomial(g.vars, lead, g.terms[lead])
            if not tail:
                continue
            if others:
                res = subduct(tail, F.with_gens(others))
                new_tail = res.r
            else:
                new_tail = tail - tail.constant_value()
            new = Polynomial.monomial(g.vars, lead, 1) + new_tail
            if new != g:
                kept[i] = new
                changed = True
        if not changed:
            break
    return F.with_gens(kept)


@dataclass
class InitialMonoid:
    points: List[Exponent]
    bound: int
    partial: bool

    def __contains__(self, p):
        return tuple(p) in set(self.points)

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return len(self.points)


def initial_algebra_monoid(source, coordinate_bound: int) -> InitialMonoid:
    """Elements of the monoid generated by the basis' initial exponents with
    every coordinate at most ``coordinate_bound``.

    ``source`` is a :class:`SagbiReport` (flagged partial when Truncated), a
    :class:`GeneratorSet` (assumed complete) or a list of exponents with an
    explicit dimension in its first entry.
    """
    from .monoid import box_closure

    if isinstance(source, SagbiReport):
        initials = source.initial_exponents
        partial = source.status != FINITE
        n = source.order.nvars
    elif isinstance(source, GeneratorSet):
        initials = list(source.initials)
        partial = False
        n = len(source.vars)
    else:
        initials = [tuple(u) for u in source]
        partial = False
        n = len(initials[0]) if initials else 2
    points = box_closure(initials, coordinate_bound, n)
    return InitialMonoid(sorted(points), coordinate_bound, partial)

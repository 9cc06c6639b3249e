"""Submonoids of the non-negative integer lattice and planar cones.

Monoids here may be infinitely generated, so every enumeration takes an
explicit coordinate bound and only ever looks at the box ``[0, bound]^n``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, gcd
from typing import Callable, Dict, List, Optional, Tuple

from .algebra import Polynomial

Point = Tuple[int, ...]


class PreconditionError(ValueError):
    pass


class DegenerateConeError(ValueError):
    pass


# ---------------------------------------------------------------------------
# monoids


@dataclass(frozen=True)
class NamedStream:
    """A closed-form generator sequence ``index -> point``.

    Points must be coordinate-wise non-decreasing in the index, which lets
    box enumerations stop at the first point outside the box.
    """

    name: str
    func: Callable[[int], Point] = field(compare=False)

    def __call__(self, i):
        return tuple(self.func(i))

    def points(self, bound, limit=None):
        out = []
        i = 0
        while limit is None or i < limit:
            p = self(i)
            if any(x > bound for x in p):
                break
            out.append(p)
            i += 1
        return out


SQUARES_STREAM = NamedStream("(1,n^2)", lambda n: (1, n * n))
STREAMS = {SQUARES_STREAM.name: SQUARES_STREAM}


@dataclass(frozen=True)
class AffineMonoid:
    """Monoid generated by ``finite_gens``, the arithmetic progressions
    ``base + m*period`` (m >= 0) of ``families``, and an optional stream."""

    dimension: int
    finite_gens: Tuple[Point, ...] = ()
    families: Tuple[Tuple[Point, Point], ...] = ()
    stream: Optional[NamedStream] = None

    def __post_init__(self):
        object.__setattr__(self, "finite_gens", tuple(tuple(g) for g in self.finite_gens))
        object.__setattr__(self, "families", tuple((tuple(b), tuple(p)) for b, p in self.families))
        for g in self.finite_gens:
            _check_point(g, self.dimension)
        for b, p in self.families:
            _check_point(b, self.dimension)
            _check_point(p, self.dimension)
            if not any(p):
                raise ValueError("family periods must be non-zero")

    def generators_in_box(self, bound) -> List[Point]:
        gens = set()
        for g in self.finite_gens:
            if all(x <= bound for x in g):
                gens.add(g)
        for base, period in self.families:
            p = base
            while all(x <= bound for x in p):
                gens.add(p)
                p = tuple(a + b for a, b in zip(p, period))
        if self.stream is not None:
            gens.update(self.stream.points(bound))
        gens.discard((0,) * self.dimension)
        return sorted(gens)

    def elements_in_box(self, bound):
        return box_closure(self.generators_in_box(bound), bound, self.dimension)


def _check_point(p, n):
    if len(p) != n:
        raise ValueError(f"point {p} does not have dimension {n}")
    if any((not isinstance(x, int)) or x < 0 for x in p):
        raise ValueError(f"point {p} is not in the non-negative lattice")


def _box(bound, n):
    return itertools.product(range(bound + 1), repeat=n)


def _closure_table(gens, bound, n) -> Dict[Point, Optional[Point]]:
    """Reachable box points mapped to the generator used last (None for 0)."""
    gens = [tuple(g) for g in gens if any(g) and all(x <= bound for x in g)]
    table: Dict[Point, Optional[Point]] = {(0,) * n: None}
    # lexicographic sweep: p - g precedes p for every non-zero g <= p
    for p in _box(bound, n):
        if p in table:
            continue
        for g in gens:
            q = tuple(a - b for a, b in zip(p, g))
            if min(q) >= 0 and q in table:
                table[p] = g
                break
    return table


def box_closure(gens, bound, n=2) -> set:
    """All sums of ``gens`` that stay inside ``[0, bound]^n``."""
    return set(_closure_table(gens, bound, n))


@dataclass
class Membership:
    member: bool
    decomposition: List[Point] = field(default_factory=list)

    def __bool__(self):
        return self.member


def membership(M: AffineMonoid, p, search_bound: int) -> Membership:
    """Decide whether ``p`` is a sum of generators with coordinates at most
    ``search_bound``; a decomposition is returned on success."""
    p = tuple(p)
    if any(x > search_bound for x in p):
        raise ValueError("point lies outside the search box")
    table = _closure_table(M.generators_in_box(search_bound), search_bound, M.dimension)
    if p not in table:
        return Membership(False)
    parts = []
    while table[p] is not None:
        g = table[p]
        parts.append(g)
        p = tuple(a - b for a, b in zip(p, g))
    return Membership(True, sorted(parts))


def irreducibles(M: AffineMonoid, box_bound: int) -> List[Point]:
    """Irreducible elements of ``M`` inside the box.

    Any splitting of a box point has both parts inside the box, so the test
    against the box elements is exact.
    """
    if box_bound < 1:
        raise ValueError("box_bound must be at least 1")
    elems = M.elements_in_box(box_bound)
    nonzero = sorted(e for e in elems if any(e))
    out = []
    for x in nonzero:
        split = False
        for y in nonzero:
            if y == x:
                continue
            z = tuple(a - b for a, b in zip(x, y))
            if min(z) < 0:
                continue
            if any(z) and z in elems:
                split = True
                break
        if not split:
            out.append(x)
    return out


# ---------------------------------------------------------------------------
# planar cones


def primitive(v) -> Point:
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("the zero vector has no primitive form")
    return tuple(x // g for x in v)


def _cross(a, b):
    return a[0] * b[1] - a[1] * b[0]


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


@dataclass(frozen=True)
class Cone2D:
    """Cone spanned by two rays with facet normals.

    ``normals[i]`` vanishes on ``rays[i]`` and is positive on the other
    ray.  A degenerate cone has a single ray (or none) and no normals.
    """

    rays: Tuple[Point, ...]
    normals: Tuple[Point, ...] = ()

    @classmethod
    def from_rays(cls, v1, v2):
        v1, v2 = primitive(v1), primitive(v2)
        c = _cross(v1, v2)
        if c == 0:
            raise PreconditionError(f"{v1} and {v2} are linearly dependent")
        w1 = primitive((-v1[1], v1[0]))
        if _dot(w1, v2) < 0:
            w1 = (-w1[0], -w1[1])
        w2 = primitive((-v2[1], v2[0]))
        if _dot(w2, v1) < 0:
            w2 = (-w2[0], -w2[1])
        return cls((v1, v2), (w1, w2))

    @property
    def degenerate(self):
        return len(self.rays) < 2

    def contains(self, p):
        if self.degenerate:
            if not self.rays:
                return not any(p)
            return _cross(self.rays[0], p) == 0 and _dot(self.rays[0], p) >= 0
        return all(_dot(w, p) >= 0 for w in self.normals)


def cone_of(points) -> Cone2D:
    """Cone generated by non-negative planar points: its extreme rays
    (smallest slope first) and facet normals."""
    pts = [tuple(p) for p in points]
    if any(len(p) != 2 for p in pts):
        from .algebra import DimensionError

        raise DimensionError("cone_of works in dimension 2 only")
    pts = [p for p in pts if any(p)]
    if not pts:
        raise ValueError("need at least one non-zero point")
    if any(min(p) < 0 for p in pts):
        raise ValueError("points must be non-negative")
    lo = pts[0]
    hi = pts[0]
    for p in pts[1:]:
        if _cross(lo, p) < 0:
            lo = p
        if _cross(hi, p) > 0:
            hi = p
    if _cross(lo, hi) == 0:
        return Cone2D((primitive(lo),))
    return Cone2D.from_rays(lo, hi)


def interior_contains(C: Cone2D, p) -> bool:
    if C.degenerate:
        raise DegenerateConeError("a degenerate cone has no interior")
    return all(_dot(w, p) > 0 for w in C.normals)


# ---------------------------------------------------------------------------
# module monoids and finite generation


@dataclass(frozen=True)
class NModule:
    """The progressions ``u + m*period`` for each base ``u``."""

    period: Point
    bases: Tuple[Point, ...]

    def __post_init__(self):
        if not self.bases:
            raise ValueError("an N-module needs at least one base point")

    def points(self, bound):
        out = set()
        for u in self.bases:
            p = tuple(u)
            while all(x <= bound for x in p):
                out.add(p)
                p = tuple(a + b for a, b in zip(p, self.period))
        return sorted(out)


def construct_module_monoid(v1, v2, us) -> AffineMonoid:
    """Monoid generated by ``v1`` and the progressions ``u + m*v2``.

    Requires ``v1, v2`` linearly independent and every ``u`` strictly inside
    the cone they span.
    """
    v1, v2 = tuple(v1), tuple(v2)
    us = [tuple(u) for u in us]
    if not us:
        raise PreconditionError("at least one module generator is required")
    for p in [v1, v2, *us]:
        _check_point(p, 2)
    if _cross(v1, v2) == 0:
        raise PreconditionError(f"{v1} and {v2} are linearly dependent")
    C = Cone2D.from_rays(v1, v2)
    for u in us:
        if not interior_contains(C, u):
            raise PreconditionError(f"{u} is not in the interior of the cone of {v1}, {v2}")
    return AffineMonoid(2, finite_gens=(v1,), families=tuple((u, v2) for u in us))


def module_of(M: AffineMonoid) -> Optional[NModule]:
    shape = module_shape(M)
    if shape is None:
        return None
    return NModule(shape[1], tuple(shape[2]))


def module_shape(M: AffineMonoid):
    """``(v1, v2, us)`` when ``M`` has the module-monoid shape, else None."""
    if M.stream is not None or len(M.finite_gens) != 1 or not M.families or M.dimension != 2:
        return None
    periods = {p for _, p in M.families}
    if len(periods) != 1:
        return None
    v1 = M.finite_gens[0]
    v2 = periods.pop()
    us = [b for b, _ in M.families]
    try:
        construct_module_monoid(v1, v2, us)
    except PreconditionError:
        return None
    return v1, v2, us


@dataclass
class FGVerdict:
    answer: str  # "Yes", "No" or "Unknown"
    reason: str
    evidence: dict = field(default_factory=dict)


def is_finitely_generated(M: AffineMonoid, probe_bound: int = 50) -> FGVerdict:
    if not M.families and M.stream is None:
        return FGVerdict("Yes", "finitely many generators")
    shape = module_shape(M)
    if shape is not None:
        v1, v2, us = shape
        C = Cone2D.from_rays(v1, v2)
        w2 = C.normals[1]
        u_min = min(us, key=lambda u: _dot(w2, u))
        return FGVerdict(
            "No",
            "the progression u_min + m*v2 consists of irreducible elements",
            {"v1": v1, "v2": v2, "u_min": u_min, "w1": C.normals[0], "w2": w2},
        )
    if M.stream is not None:
        slopes = []
        for i in range(probe_bound):
            p = M.stream(i)
            slopes.append(Fraction(p[1], p[0]) if p[0] else None)
        finite = [s for s in slopes if s is not None]
        increasing = all(a < b for a, b in zip(finite, finite[1:]))
        return FGVerdict(
            "Unknown",
            "slopes of the stream keep increasing within the probe" if increasing else "probe inconclusive",
            {"slopes": slopes, "strictly_increasing": increasing},
        )
    return FGVerdict("Unknown", "families outside the module-monoid shape")


# ---------------------------------------------------------------------------
# finite generators for module monoids


def _solve_2x2(v1, v2, u):
    """Rational (alpha, beta) with u = alpha*v1 + beta*v2."""
    det = _cross(v1, v2)
    alpha = Fraction(_cross(u, v2), det)
    beta = Fraction(_cross(v1, u), det)
    return alpha, beta


def _lcm(a, b):
    return a * b // gcd(a, b)


def thm34_finite_generators(v1, v2, us, vars=("x", "y")):
    """Finite generating set of the algebra of the binomial ``x^v1 + x^v2``
    and all monomials ``x^(u + m v2)``.

    For each ``u`` finds the smallest positive ``ell`` with
    ``ell*u = a*v1 + b*v2`` (``a, b`` positive), and keeps the monomials
    ``x^(u + k v2)`` for ``0 <= k < a + b``.  Returns ``(polynomials, data)``
    where each datum is a dict with keys ``u, ell, a, b, exponents``.
    """
    construct_module_monoid(v1, v2, us)
    v1, v2 = tuple(v1), tuple(v2)
    polys = [Polynomial(vars, {v1: 1, v2: 1})]
    data = []
    for u in us:
        u = tuple(u)
        alpha, beta = _solve_2x2(v1, v2, u)
        ell = _lcm(alpha.denominator, beta.denominator)
        a, b = int(alpha * ell), int(beta * ell)
        exps = [tuple(x + k * y for x, y in zip(u, v2)) for k in range(a + b)]
        data.append({"u": u, "ell": ell, "a": a, "b": b, "exponents": exps})
        for e in exps:
            polys.append(Polynomial(vars, {e: 1}))
    return polys, data


# ---------------------------------------------------------------------------
# the binomial-coefficient matrix


def _det(M):
    M = [[Fraction(x) for x in row] for row in M]
    n = len(M)
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if M[r][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            M[c], M[p] = M[p], M[c]
            det = -det
        det *= M[c][c]
        for r in range(c + 1, n):
            f = M[r][c] / M[c][c]
            if f:
                M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    return det


def _solve(M, rhs):
    n = len(M)
    aug = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(M, rhs)]
    for c in range(n):
        p = next(r for r in range(c, n) if aug[r][c])
        aug[c], aug[p] = aug[p], aug[c]
        piv = aug[c][c]
        aug[c] = [x / piv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c]:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return [row[-1] for row in aug]


def binomial_matrix(a) -> List[List[int]]:
    """The (a+1)x(a+1) matrix taking the monomial basis ``m_p`` to the
    polynomials ``f_k``: entry (p, k) is ``C(a+1-k, p-k+1)`` for k >= 1 and
    column 0 is the first unit vector."""
    n = a + 1
    A = [[0] * n for _ in range(n)]
    A[0][0] = 1
    for k in range(1, n):
        for p in range(n):
            j = p - k + 1
            if 0 <= j <= a + 1 - k:
                A[p][k] = comb(a + 1 - k, j)
    return A


@dataclass
class MatrixReport:
    a: int
    matrix: List[List[int]]
    determinant: Fraction
    coefficients: List[Fraction]
    column_reduced: List[List[int]]
    reduces_to_previous: bool

    @property
    def regular(self):
        return self.determinant != 0


def thm34_matrix(a: int) -> MatrixReport:
    """Build the matrix, its determinant, the coefficients expressing
    ``m_a`` in ``f_0..f_a`` and the column-difference reduction check."""
    if a < 1:
        raise ValueError("a must be at least 1")
    A = binomial_matrix(a)
    n = a + 1
    det = _det(A)
    rhs = [0] * n
    rhs[a] = 1
    coeffs = _solve(A, rhs) if det else []
    # subtract column k+1 from column k for k = 1..a-1
    R = [row[:] for row in A]
    for k in range(1, a):
        for p in range(n):
            R[p][k] = A[p][k] - A[p][k + 1]
    if a == 1:
        ok = R == A
    else:
        prev = binomial_matrix(a - 1)
        ok = all(R[p][:a] == prev[p] for p in range(a)) and R[a] == [0] * a + [1]
    return MatrixReport(a, A, det, coeffs, R, ok)


def thm34_reconstruction(a: int, b: int = 1, vars=("x", "y")):
    """Check ``sum c_k f_k == m_a`` by expansion for ``v1=(1,0), v2=(0,1),
    u=(a,b)`` (so ``ell = 1``).  Returns ``(ok, lhs, m_a)``."""
    rep = thm34_matrix(a)
    u = (a, b)
    X = Polynomial(vars, {(1, 0): 1})
    Y = Polynomial(vars, {(0, 1): 1})
    binom = X + Y

    def mono(e):
        return Polynomial(vars, {e: 1})

    f = [mono((u[0] + a, u[1] + b))]
    for k in range(1, a + 1):
        f.append(mono((u[0], u[1] + b - 1 + k)) * binom ** (a + 1 - k))
    m_a = mono((u[0], u[1] + a + b))
    lhs = Polynomial.zero(vars)
    for c, fk in zip(rep.coefficients, f):
        lhs = lhs + fk.scale(c)
    return lhs == m_a, lhs, m_a


# ---------------------------------------------------------------------------
# text form: "1,0; 0,1+m*1,1; (1,n^2)"


def _int_point(text):
    try:
        p = tuple(int(v) for v in text.split(","))
    except ValueError:
        raise ValueError(f"bad point {text!r}") from None
    if len(p) != 2 or min(p) < 0:
        raise ValueError(f"bad point {text!r}")
    return p


def parse_spec(text: str) -> AffineMonoid:
    """Parse semicolon-separated points ``a,b``, families ``base+m*period``
    and named streams such as ``(1,n^2)``."""
    gens, families, stream = [], [], None
    for item in text.replace(" ", "").split(";"):
        if not item:
            continue
        if item in STREAMS:
            if stream is not None:
                raise ValueError("at most one stream is supported")
            stream = STREAMS[item]
        elif "+m*" in item:
            base, period = item.split("+m*", 1)
            families.append((_int_point(base), _int_point(period)))
        elif item.startswith("("):
            raise ValueError(f"unknown stream {item!r}; known: {', '.join(STREAMS)}")
        else:
            gens.append(_int_point(item))
    if not (gens or families or stream):
        raise ValueError("empty monoid specification")
    return AffineMonoid(2, tuple(gens), tuple(families), stream)

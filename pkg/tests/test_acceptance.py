"""Acceptance criteria, one test per criterion (two where a literal
requirement cannot hold).  Each records a pass/fail line that the
terminal summary prints."""

import random
import time
from fractions import Fraction

import pytest

import oracles as o
from conftest import CRITERIA
from sagbilab import (
    GeneratorSet,
    Ideal,
    Polynomial,
    buchberger,
    compare,
    construct_module_monoid,
    find_initial_representation,
    grevlex,
    grlex,
    irreducibles,
    lex,
    parse,
    sagbi_check,
    sagbi_construct,
    subduct,
    thm34_finite_generators,
    thm34_matrix,
    toric_ideal,
)
from sagbilab.algebra import Cmp, block_order, weight_order
from sagbilab.groebner import is_groebner
from sagbilab.harness import squares_monoid, thm41_checks
from sagbilab.monoid import AffineMonoid, box_closure, thm34_reconstruction
from sagbilab.sagbi import FINITE, TRUNCATED
from sagbilab.toric import binomial, relation_vars

XY = ("x", "y")
X3 = ("X0", "X1", "X2")


def gens(*texts):
    return GeneratorSet([parse(t, XY) for t in texts])


def record(n, ok, note=""):
    CRITERIA[n] = (bool(ok), note)
    print(f"criterion {n}: {'PASS' if ok else 'FAIL'}" + (f" ({note})" if note else ""))


class Timer:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.t0


def family(points, fams, d):
    out = set(points)
    for base, period in fams:
        p = base
        while sum(p) <= d:
            out.add(p)
            p = (p[0] + period[0], p[1] + period[1])
    return sorted(p for p in out if sum(p) <= d)


def test_criterion_1_classic_truncated():
    with Timer() as t:
        rep = sagbi_construct(gens("x+y", "x*y", "x*y^2"), 12)
    ok = rep.status == TRUNCATED and sorted(rep.initial_exponents) == [(1, 0)] + [(1, m) for m in range(1, 12)]
    ok = ok and t.seconds < 5
    record(1, ok, f"{t.seconds:.2f}s")
    assert ok


@pytest.mark.parametrize("s", [2, 3])
def test_criterion_2_binomial_families(s):
    d = 18
    g = [f"x^{s}+y^{s}"]
    for i in range(s):
        g += [f"x^{s + i}*y^{s - i}", f"x^{s + i}*y^{2 * s - i}"]
    with Timer() as t:
        rep = sagbi_construct(gens(*g), d)
    expected = family([(s, 0)], [((s + i, s - i), (0, s)) for i in range(s)], d)
    ok = rep.status == TRUNCATED and sorted(rep.initial_exponents) == expected and t.seconds < 10
    prev = CRITERIA.get(2, (True, ""))
    record(2, prev[0] and ok, (prev[1] + "; " if prev[1] else "") + f"s={s} {t.seconds:.2f}s")
    assert ok


@pytest.mark.parametrize("a, b", [(2, 1), (4, 3)])
def test_criterion_3_vertical_families(a, b):
    d = 2 * (a + b) + 6
    g = ["x+y"] + [f"x^{a}*y^{m}" for m in range(b, a + 2 * b)]
    with Timer() as t:
        rep = sagbi_construct(gens(*g), d)
    expected = family([(1, 0)], [((a, b), (0, 1))], d)
    ok = rep.status == TRUNCATED and sorted(rep.initial_exponents) == expected and t.seconds < 10
    prev = CRITERIA.get(3, (True, ""))
    record(3, prev[0] and ok, (prev[1] + "; " if prev[1] else "") + f"(a,b)=({a},{b}) d={d} {t.seconds:.2f}s")
    assert ok


def test_criterion_4_branches():
    with Timer() as t:
        independent = sagbi_check(gens("x+y", "x^2*y")).is_sagbi
        rep = sagbi_construct(gens("x+y", "x^2"), 6)
    # the element named in the proof: (x+y)^2 - x^2, halved
    f = (parse("x+y", XY) ** 2 - parse("x^2", XY)).scale(Fraction(1, 2))
    basis = set(rep.basis)
    ok = independent and rep.status == FINITE and f in basis and t.seconds < 2
    literal = basis == {parse("x^2", XY), f}
    record(4, ok and literal, "independent IsSagbi, dependent Finite with xy+1/2y^2; "
           f"literal basis {{x^2, xy+1/2y^2}} {'holds' if literal else 'does not hold: x+y stays a generator'}")
    assert ok


@pytest.mark.xfail(strict=True, reason="x+y lies in the algebra, so no SAGBI basis omits a degree-one generator")
def test_criterion_4_literal_basis():
    rep = sagbi_construct(gens("x+y", "x^2"), 6)
    f = (parse("x+y", XY) ** 2 - parse("x^2", XY)).scale(Fraction(1, 2))
    assert set(rep.basis) == {parse("x^2", XY), f}


@pytest.mark.parametrize("v1, v2, u", [((1, 0), (0, 1), (2, 1)), ((2, 1), (1, 2), (3, 3))])
def test_criterion_5_module_pipeline(v1, v2, u):
    bound = 8
    with Timer() as t:
        polys, _ = thm34_finite_generators(v1, v2, [u])
        d = max(2 * bound, max(p.total_degree() for p in polys))
        rep = sagbi_construct(GeneratorSet(polys), d)
        got = box_closure(rep.initial_exponents, bound)
        want = construct_module_monoid(v1, v2, [u]).elements_in_box(bound)
    ok = got == want and t.seconds < 30
    prev = CRITERIA.get(5, (True, ""))
    record(5, prev[0] and ok, (prev[1] + "; " if prev[1] else "") + f"{v1},{v2},{u} box {bound} {t.seconds:.2f}s")
    assert ok


def test_criterion_6_matrix():
    with Timer() as t:
        regular = all(thm34_matrix(a).regular for a in range(1, 13))
        dets = [thm34_matrix(a).determinant for a in range(1, 13)]
        recon = all(thm34_reconstruction(a)[0] for a in range(1, 5))
    ok = regular and recon and dets == [o.binomial_matrix_det(a) for a in range(1, 13)] and t.seconds < 5
    record(6, ok, f"{t.seconds:.2f}s")
    assert ok


H = [
    "X0*X1 - X0*X2 - 2*X1^2 + 3*X1*X2 - X2^2",
    "X0^3 - 3*X0^2*X1 + 4*X0*X1^2 - X0*X2^2 - 4*X1^3 + 4*X1^2*X2 - X1*X2^2",
    "X0^3*X2 - 3*X0^2*X1*X2 + 4*X0*X1^2*X2 - X0*X1*X2^2 - X1^4",
]
H_REDUCED = [
    "(X1 - X2)^4",
    "X0*X1 - X0*X2 - 2*X1^2 + 3*X1*X2 - X2^2",
    "X0^3 - 3*X0^2*X2 + 3*X0*X2^2 - 8*X1^3 + 24*X1^2*X2 - 24*X1*X2^2 + 7*X2^3",
]


def test_criterion_7_groebner_step():
    X1, X2 = Polynomial.variable(X3, "X1"), Polynomial.variable(X3, "X2")
    printed = [(X1 - X2) ** 4] + [parse(s, X3) for s in H_REDUCED[1:]]
    with Timer() as t:
        gb = buchberger(Ideal([parse(s, X3) for s in H]), lex(3))
    ok = set(gb) == set(printed) and gb.elements[0] == (X1 - X2) ** 4 and t.seconds < 5
    record(7, ok, f"{t.seconds:.2f}s")
    assert ok


def test_criterion_8_identities():
    with Timer() as t:
        checks = dict(thm41_checks(2, 3))
        lib = checks["base case expansion of g"] and all(checks[f"{p} identity k={k}"] for p in ("odd", "even") for k in (1, 2, 3))
        oracle = all(o.identity_residuals(k) == (0, 0) for k in (1, 2, 3))
    ok = lib and oracle and t.seconds < 10
    record(8, ok, f"{t.seconds:.2f}s")
    assert ok


@pytest.mark.parametrize("m", [2, 3])
def test_criterion_9_finale(m):
    T = ("x", "y", "a")
    x, y, a = (Polynomial.variable(T, v) for v in T)
    with Timer() as t:
        F = gens(*[f"y^{i * i}*x+y^{i * i + 1}" for i in range(m + 1)])
        is_sagbi = sagbi_check(F).is_sagbi
        rel = toric_ideal([(1, i * i) for i in range(m + 1)])
        G = GeneratorSet([y ** (i * i) * (x + a * y) for i in range(m + 1)], lex(3))
        vanish = len(rel) > 0 and all(not (G.product(al) - G.product(be)) for al, be in rel.pairs)
    ok = is_sagbi and vanish and t.seconds < 10
    prev = CRITERIA.get(9, (True, ""))
    record(9, prev[0] and ok, (prev[1] + "; " if prev[1] else "") + f"m={m} {t.seconds:.2f}s")
    assert ok


def test_criterion_10_squares_monoid():
    with Timer() as t:
        got = irreducibles(squares_monoid(), 26)
    brute = o.irreducibles_brute([(1, n * n) for n in range(6)], 26)
    ok = got == brute == [(1, 0), (1, 1), (1, 4), (1, 9), (1, 16), (1, 25)] and t.seconds < 2
    record(10, ok, f"{t.seconds:.2f}s")
    assert ok


OBSERVED = {
    "E5.1": (["x+y", "x^2*y", "x^2*y^2", "x^3*y^3"], 12, [(1, 0), (2, 1), (2, 2), (3, 3), (2, 4), (2, 5)], [((2, 6), (0, 1))]),
    "E5.2": (["x^2+y^2", "x^2*y", "x^2*y^2"], 12, [(2, 0), (2, 1), (2, 2), (2, 4), (2, 6)], [((2, 8), (0, 2))]),
    "E5.3": (["x*y+y^2", "x", "x*y^2"], 8, [(1, m) for m in range(6)], [((1, 6), (0, 1))]),
}
E54_PRINTED = [(2, 0), (3, 0), (2, 2), (3, 3), (5, 7), (6, 8), (6, 10), (7, 11), (7, 13), (8, 14), (8, 16), (9, 17), (9, 19)]
E54_TIME = {}


def e54_prefix_holds(d):
    with Timer() as t:
        rep = sagbi_construct(gens("x^2-y^2", "x^3-y^3", "x^4-y^4"), d)
    E54_TIME[d] = t.seconds
    return rep.status == TRUNCATED and sorted(rep.initial_exponents) == sorted(E54_PRINTED)


def test_criterion_11_experiments():
    with Timer() as t:
        results = {}
        for key, (g, d, pts, fams) in OBSERVED.items():
            rep = sagbi_construct(gens(*g), d)
            results[key] = rep.status == TRUNCATED and sorted(rep.initial_exponents) == family(pts, fams, d)
        shapes = [parse(s, XY) for s in ("x", "x*y+y^2", "x*y^2", "x*y^3+1/2*y^4", "x*y^4", "x*y^5+1/3*y^6")]
        results["E5.3 shapes"] = list(sagbi_construct(gens(*OBSERVED["E5.3"][0]), 8).basis[:6]) == shapes
        results["E5.4 at 28"] = e54_prefix_holds(28)
        flipped = sagbi_construct(gens("x^2+y^2", "x^3+y^3", "x^4+y^4"), 12)
        results["E5.4 flipped"] = flipped.status == FINITE and set(flipped.basis) == {
            parse(s, XY) for s in ("x^2+y^2", "x^3+y^3", "x^2*y^2", "x^3*y^3")
        }
        results["E5.4 at 26"] = e54_prefix_holds(26)
    ok = all(v for k, v in results.items() if k != "E5.4 at 26") and t.seconds < 60
    literal = results["E5.4 at 26"]
    note = f"{t.seconds:.2f}s; 5.1-5.3, shapes, flipped Finite and 5.4 through (9,19) at degree 28 hold"
    if not literal:
        note += "; literal cutoff 26 cannot contain (9,19), which has total degree 28"
    record(11, ok and literal, note)
    assert ok


@pytest.mark.xfail(strict=True, reason="(9,19) has total degree 28, beyond a degree-26 cutoff")
def test_criterion_11_literal_cutoff():
    assert e54_prefix_holds(26)


ORDERS = [lex(3), grlex(3), grevlex(3), weight_order((2, 1, 1)), block_order([(0,), (1, 2)], [lex(1), grevlex(2)])]


def test_criterion_12_property_suites():
    rng = random.Random(12)
    with Timer() as t:
        # order axioms and multiplicativity of initial terms
        axioms = True
        for order in ORDERS:
            for _ in range(300):
                a, b, c = (tuple(rng.randint(0, 5) for _ in range(3)) for _ in range(3))
                ab = compare(order, a, b)
                axioms &= ab == -compare(order, b, a)
                axioms &= compare(order, tuple(p + q for p, q in zip(a, c)), tuple(p + q for p, q in zip(b, c))) == ab
                axioms &= compare(order, tuple(p + q for p, q in zip(a, c)), a) != Cmp.LESS
        mult = True
        for _ in range(200):
            order = rng.choice(ORDERS)
            f, g = (random_poly(rng, ("x", "y", "z"), 3, 3) for _ in range(2))
            if f and g:
                lf, lg = f.leading_exponent(order), g.leading_exponent(order)
                mult &= (f * g).leading_exponent(order) == tuple(p + q for p, q in zip(lf, lg))
        # subduction contract on 500 random cases
        contract = True
        for _ in range(500):
            order = rng.choice([grevlex(2), lex(2)])
            gs = [random_poly(rng, XY, rng.randint(1, 3), 3) for _ in range(rng.randint(1, 3))]
            gs = [h for h in gs if h and not h.is_constant()] or [parse("x", XY)]
            F = GeneratorSet(gs, order)
            f = random_poly(rng, XY, rng.randint(1, 5), 5)
            res = subduct(f, F)
            contract &= f == res.q + res.r + Polynomial.constant(XY, res.c)
            contract &= all(find_initial_representation(e, F.initials) is None for e in res.r.support())
        # toric soundness and small completeness
        toric = True
        for _ in range(15):
            cols = [(rng.randint(0, 3), rng.randint(1, 3)) for _ in range(rng.randint(2, 4))]
            ideal = toric_ideal(cols)
            toric &= all(
                all(sum(k * c[j] for k, c in zip(al, cols)) == sum(k * c[j] for k, c in zip(be, cols)) for j in range(2))
                for al, be in ideal.pairs
            )
            if ideal.pairs:
                G = buchberger(Ideal(ideal.generators), grevlex(len(cols)))
                toric &= is_groebner(list(G), grevlex(len(cols)))
                V = relation_vars(len(cols))
                for v in o.kernel_brute(cols, 2):
                    toric &= G.contains(binomial(V, tuple(max(x, 0) for x in v), tuple(max(-x, 0) for x in v)))
        # irreducibles against brute force, box at most 20
        irr = True
        for _ in range(15):
            gset = sorted({(rng.randint(0, 6), rng.randint(0, 6)) for _ in range(rng.randint(1, 4))} - {(0, 0)}) or [(1, 1)]
            bound = rng.randint(5, 20)
            irr &= irreducibles(AffineMonoid(2, tuple(gset)), bound) == o.irreducibles_brute(gset, bound)
    ok = axioms and mult and contract and toric and irr and t.seconds < 60
    record(12, ok, f"{t.seconds:.2f}s")
    assert ok


def random_poly(rng, vars, terms, deg):
    out = {}
    for _ in range(terms):
        out[tuple(rng.randint(0, deg) for _ in vars)] = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
    return Polynomial(vars, out)

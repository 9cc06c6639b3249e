"""Binomial plus monomials on a progression.

For independent v1, v2 and u inside their cone, the algebra generated by
x^v1 + x^v2 and all monomials x^(u + m v2) is finitely generated, while
its initial monoid is not.  This script builds the finite generating set,
completes it and compares the initial monoid with the module monoid.
"""

from sagbilab import GeneratorSet, construct_module_monoid, irreducibles, sagbi_construct, thm34_finite_generators, thm34_matrix
from sagbilab.monoid import box_closure, thm34_reconstruction

BOX = 8

for v1, v2, u in [((1, 0), (0, 1), (2, 1)), ((2, 1), (1, 2), (3, 3)), ((1, 0), (0, 1), (3, 1))]:
    polys, data = thm34_finite_generators(v1, v2, [u])
    d = data[0]
    print(f"v1={v1} v2={v2} u={u}: {d['ell']}*u = {d['a']}*v1 + {d['b']}*v2")
    print("  generators:", ", ".join(map(str, polys)))
    rep = sagbi_construct(GeneratorSet(polys), max(2 * BOX, max(p.total_degree() for p in polys)))
    M = construct_module_monoid(v1, v2, [u])
    same = box_closure(rep.initial_exponents, BOX) == M.elements_in_box(BOX)
    print(f"  completion {rep.status}; initial monoid equals module monoid in the box: {same}")
    print("  irreducibles:", irreducibles(M, BOX))

print("\nthe binomial-coefficient matrices")
for a in range(1, 6):
    r = thm34_matrix(a)
    ok = thm34_reconstruction(a)[0]
    print(f"  a={a}: det={r.determinant}, reduces to a-1: {r.reduces_to_previous}, reconstruction: {ok}")
print("  a=3 matrix:")
for row in thm34_matrix(3).matrix:
    print("   ", row)

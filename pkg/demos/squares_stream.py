"""A monoid that is not finitely generated yet comes from a SAGBI basis.

The points (1, n^2) generate a monoid whose cone never closes: every
finite subset spans a cone that misses the next square.  Still, the
polynomials y^(i^2) (x + y) form a SAGBI basis for every finite i range,
and the proof steps check out exactly.
"""

from sagbilab import GeneratorSet, cone_of, irreducibles, is_finitely_generated, parse, sagbi_check
from sagbilab.harness import squares_monoid, thm41_checks

M = squares_monoid()
print("irreducibles in [0,26]^2:", irreducibles(M, 26))

verdict = is_finitely_generated(M, probe_bound=8)
print("finitely generated?", verdict.answer, "-", verdict.reason)
print("slopes:", [str(s) for s in verdict.evidence["slopes"]])

for N in range(1, 5):
    C = cone_of([(1, i * i) for i in range(N + 1)])
    nxt = (1, (N + 1) ** 2)
    print(f"cone of the first {N + 1} squares has rays {C.rays}; contains {nxt}? {C.contains(nxt)}")

for m in (2, 3, 4):
    F = GeneratorSet([parse(f"y^{i * i}*x + y^{i * i + 1}", ("x", "y")) for i in range(m + 1)])
    print(f"y^(i^2)(x+y), i <= {m}: SAGBI basis? {sagbi_check(F).is_sagbi}")

print("\nproof steps for m=3, k <= 3:")
for name, ok in thm41_checks(3, 3):
    print(f"  [{'ok' if ok else 'FAIL'}] {name}")

"""The algebra generated by x+y, xy and xy^2 has no finite SAGBI basis.

The single toric relation among the initial exponents leaves the
remainder xy^3, and every completion round adds the next power
x*y^m.  Run with an optional degree bound (default 12).
"""

import sys

from sagbilab import GeneratorSet, format_poly, lex, parse, sagbi_check, sagbi_construct
from sagbilab.plot import plot_monoid

XY = ("x", "y")
bound = int(sys.argv[1]) if len(sys.argv) > 1 else 12

F = GeneratorSet([parse(s, XY) for s in ("x+y", "x*y", "x*y^2")])
print("generators:", ", ".join(map(str, F)))
print("initial exponents:", list(F.initials))

check = sagbi_check(F)
print("\nrelations among the initials:", [format_poly(g, lex(3)) for g in check.relations])
print("is a SAGBI basis:", check.is_sagbi)
print("witness", format_poly(check.witness, lex(3)), "leaves", check.witness_remainder)

rep = sagbi_construct(F, bound)
print(f"\ncompletion up to degree {bound}: {rep.status} after {rep.rounds} rounds")
for g, e in zip(rep.basis, rep.initial_exponents):
    print(f"  {str(g):<12} in = {e}")

# every new initial sits on the vertical line through (1,1)
assert rep.initial_exponents[1:] == [(1, m) for m in range(1, bound)]

svg = plot_monoid(rep.initial_exponents, 8, title="initial monoid, truncated")
with open("classic_truncation.svg", "w") as fh:
    fh.write(svg)
print("\nwrote classic_truncation.svg")

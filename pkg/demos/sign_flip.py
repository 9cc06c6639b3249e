"""Experiments where only a sign changes the answer.

x^2-y^2, x^3-y^3, x^4-y^4 keeps producing new initial terms along two
lines of slope 3, while x^2+y^2, x^3+y^3, x^4+y^4 finishes with four
generators.  The other runs show the prefixes that look periodic.
"""

from sagbilab import GeneratorSet, parse, sagbi_construct

XY = ("x", "y")


def run(texts, d):
    rep = sagbi_construct(GeneratorSet([parse(t, XY) for t in texts]), d)
    print(f"{', '.join(texts)}  (degree <= {d}): {rep.status}")
    print("   initials:", sorted(rep.initial_exponents))
    return rep


minus = run(["x^2-y^2", "x^3-y^3", "x^4-y^4"], 28)
plus = run(["x^2+y^2", "x^3+y^3", "x^4+y^4"], 12)
print("   basis:", ", ".join(map(str, plus.basis)))

late = sorted(e for e in minus.initial_exponents if e[0] >= 5)
print("\nafter (3,3) the initials alternate between two progressions with step (1,3):")
print("  ", late)

print()
run(["x+y", "x^2*y", "x^2*y^2", "x^3*y^3"], 12)
run(["x^2+y^2", "x^2*y", "x^2*y^2"], 12)
rep = run(["x*y+y^2", "x", "x*y^2"], 10)
print("   basis:", ", ".join(map(str, rep.basis)))

"""Two non-additive functions on (Q, *) that break the reverse bound.

f(x) = x with f(1) replaced by q = 1/2 passes A(x^2)A(1) <= A(x)^2 at every
sampled x, but fails A(x^2)A(y^2) <= A(xy)^2 on the hyperbola xy = 1.
A(x) = |x - 1| does the same at (2, 1/2).
"""

from fractions import Fraction

from levicivita import SampleSpec, sample_elements
from levicivita.constructions import counterexample_functions
from levicivita.inequalities import check_unit_bound
from levicivita.search import search_counterexample

f = counterexample_functions("example-a", Fraction(1, 2))
print("f(1^2) f(1) at x = 1:", f(Fraction(1)) * f(Fraction(1)))
print(check_unit_bound(f, sample_elements(SampleSpec("rat", count=1000))).summary())

found = search_counterexample("cs-reverse", f, 2000, SampleSpec("rat", seed=0))
print(found.summary())
on_hyperbola = sum(c.x * c.y == 1 for c in found.counterexamples)
print(f"{on_hyperbola} of {len(found.counterexamples)} counterexamples sit on xy = 1")

g = counterexample_functions("example-co")
found = search_counterexample("cs-reverse", g, 2000, SampleSpec("rat", seed=0))
for c in found.counterexamples:
    if (c.x, c.y) == (2, Fraction(1, 2)):
        print(f"|x-1| at (2, 1/2): A(x^2)A(y^2) = {c.lhs} > A(xy)^2 = {c.rhs}")
        break

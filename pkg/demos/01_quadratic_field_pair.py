"""The coordinate maps of Q(sqrt 2) and why they are wild.

A(a + b sqrt 2) = a and B(a + b sqrt 2) = b sqrt 2 are additive, satisfy a
paired-sum functional equation, and obey a whole chain of Cauchy-Schwarz
type bounds.  Yet neither is continuous on the reals: rationals creeping up
on 1 + sqrt 2 keep A a full unit away from A(1 + sqrt 2).
"""

from levicivita import QuadElem, SampleSpec, sample_pairs
from levicivita.constructions import discontinuity_witness, thmB_pair
from levicivita.core import check_decomposition, rep_rhs
from levicivita.inequalities import check_chain_paired_sum, check_identity

p = 2
A, B, rep = thmB_pair(p)

x, y = QuadElem(1, 1, p), QuadElem(3, -1, p)
print("x =", x, "  y =", y, "  xy =", x * y)
print("A(xy) =", A(x * y), "  rhs of the decomposition:", rep_rhs(rep, x, y)[0])
print("B(x^2)B(y^2) =", B(x * x) * B(y * y), "  A(xy)^2 =", A(x * y) ** 2, "  A(x^2)A(y^2) =", A(x * x) * A(y * y))

pairs = sample_pairs(SampleSpec("quad:2", seed=1, count=2000))
for report in (
    check_decomposition(rep, (A, B), pairs, seed=1),
    check_chain_paired_sum(A, B, pairs, seed=1),
    check_identity(A, B, pairs, "sum-system", seed=1),
):
    print(report.summary())

w = discontinuity_witness(A, p, 4)
print("\napproaching u =", w.point)
for yk, bound, gap in zip(w.approximants, w.distance_bounds, w.value_gaps):
    print(f"  y = {yk}   |y - u| < {bound}   |A(y) - A(u)| = {gap.a}")

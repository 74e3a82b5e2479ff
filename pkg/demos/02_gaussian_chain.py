"""Real and imaginary parts on Q(i): a two-sided chain with equality.

For z = x*y the pair (Re, Im) solves the paired-difference equation, so

    -Im(xy)^2 <= Re(x^2) Re(y^2) <= Re(xy)^2

and the same with the roles swapped.  At x = 1+2i, y = 2-i the left
inequalities are tight.
"""

from levicivita import GaussianRational, SampleSpec, sample_pairs
from levicivita.constructions import gaussian_re_im
from levicivita.inequalities import check_chain_paired_difference, check_cs_forward

Re, Im, rep = gaussian_re_im()
x, y = GaussianRational(1, 2), GaussianRational(2, -1)

print("xy =", x * y, " x^2 =", x * x, " y^2 =", y * y)
print("chain for Re:", -Im(x * y) ** 2, "<=", Re(x * x) * Re(y * y), "<=", Re(x * y) ** 2)
print("chain for Im:", -Re(x * y) ** 2, "<=", Im(x * x) * Im(y * y), "<=", Im(x * y) ** 2)

report = check_chain_paired_difference(Re, Im, [(x, y)])
print(report.summary())

# the forward inequality is simply false for Re
bad = check_cs_forward(Re, [(x, y)])
c = bad.first_counterexample
print(f"Re(xy)^2 = {c.lhs} but Re(x^2)Re(y^2) = {c.rhs}: forward bound {bad.verdict}")

for conjugate in (False, True):
    A, B, _ = gaussian_re_im(conjugate)
    pairs = sample_pairs(SampleSpec("gauss", seed=3, count=3000))
    print("conjugate" if conjugate else "identity ", check_chain_paired_difference(A, B, pairs).summary())

"""cos/sin and cosh/sinh on (R, +), certified at rational points.

Function values are rational intervals from Taylor sums with a Lagrange
remainder, so every inequality verdict is a proof for that pair.  Pairs
whose two sides touch (x = y) are settled by an exact identity instead.
"""

from fractions import Fraction

import numpy as np

from levicivita.constructions import analytic_pair
from levicivita.intervals import enclose_analytic
from levicivita.inequalities import check_chain_paired_difference, check_chain_paired_sum, check_hyperbolic_gap

for digits in (4, 8, 16):
    iv = enclose_analytic("cos", Fraction(1), digits)
    print(f"cos(1) at {digits:>2} digits: width {float(iv.width):.1e}, numpy says {np.cos(1.0):.15f}")

grid = [Fraction(k, 10) for k in range(-20, 21)]
pairs = [(x, y) for x in grid for y in grid]
cos, sin, _ = analytic_pair("trig", 12)
cosh, sinh, _ = analytic_pair("hyperbolic", 12)
for report in (
    check_chain_paired_difference(cos, sin, pairs, max_digits=24),
    check_chain_paired_sum(cosh, sinh, pairs, max_digits=24),
    check_hyperbolic_gap(cosh, sinh, pairs),
):
    print(report.summary())

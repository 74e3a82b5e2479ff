"""Which additive maps on Q(sqrt 3) satisfy the forward inequality?

An additive map is fixed by alpha = A(1) and beta = A(sqrt 3).  The forward
bound A(xy)^2 <= A(x^2)A(y^2) holds exactly when A(x^2) keeps one sign,
i.e. when the form [[alpha, beta], [beta, 3 alpha]] is semidefinite.
We tabulate classes over a grid and compare with a sampled check.
"""

import numpy as np

from levicivita import SampleSpec
from levicivita.constructions import classify_additive, make_additive_quad
from levicivita.search import equivalence_check_thm1

symbols = {"POSITIVE": "+", "NEGATIVE": "-", "ZERO": "0", "NONE": "."}
alphas = np.arange(-3, 4)
betas = np.arange(-6, 7)

print("rows alpha, columns beta in", betas.min(), "..", betas.max())
for a in alphas:
    row = "".join(symbols[classify_additive(make_additive_quad(3, int(a), int(b))).tag.value] for b in betas)
    print(f"{a:>3} {row}")

spec = SampleSpec("quad:3", seed=5, count=300)
agree = 0
for a in alphas:
    for b in betas[::3]:
        agree += equivalence_check_thm1(make_additive_quad(3, int(a), int(b)), spec).consistent
print(f"sampled check agrees with the classifier on {agree}/{len(alphas) * len(betas[::3])} maps")

"""Evaluating a derivative at a point is a derivation on Q[t].

A(h) = h'(c) obeys A(hk) = h(c)A(k) + A(h)k(c), a symmetrized
decomposition, which forces the reverse bound A(h^2)A(k^2) <= A(hk)^2.
"""

from levicivita import PolyQ, SampleSpec, sample_pairs
from levicivita.constructions import derivation_witness
from levicivita.core import check_decomposition
from levicivita.inequalities import check_cs_reverse

t = PolyQ.t()
A, rep = derivation_witness(2)
h, k = t, t * t
print(f"A(t^2) A(t^4) = {A(h * h) * A(k * k)} <= A(t^3)^2 = {A(h * k) ** 2}")

pairs = sample_pairs(SampleSpec("poly", seed=2, count=1000, max_degree=6))
for c in (0, 1, 2, -3):
    A, rep = derivation_witness(c)
    print(f"c = {c:>2}:", check_decomposition(rep, A, pairs).verdict, check_cs_reverse(A, pairs).verdict)

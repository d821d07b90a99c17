"""
How fast does the asymptotic form kick in?
==========================================

Scale every side by N and compare the exact ratio of tiling counts (with and
without the intrusion) against the closed asymptotic expression.
"""

import mpmath

from hexatile.asymptotics import asym_ratio, classify_limit, convergence_quotient
from hexatile.formulas import Parity

cases = [(Parity.EVEN, 1, 2, 2, 1), (Parity.ODD, 3, 3, 3, 1), (Parity.EVEN, 1, 2, 4, 1)]

for parity, *p in cases:
    print(parity.value, p)
    for N in (2, 4, 8, 16, 32):
        q = convergence_quotient(parity, *p, N)
        print(f"  N={N:>2}  exact/asymptotic = {mpmath.nstr(q, 8)}")

# the terms of the estimate, in log space so nothing underflows
est = asym_ratio(Parity.EVEN, 1, 2, 4, 1, 64)
for name, value in est.terms.items():
    print(f"{name:>12}: {mpmath.nstr(value, 10)}")
print("ratio at N=64:", mpmath.nstr(est.value, 10))

# even left sides always drive the ratio to zero; odd ones depend on a criterion
cls = classify_limit(Parity.ODD, 3, 3, 3, 1)
print(cls.outcome.value, cls.criterion)

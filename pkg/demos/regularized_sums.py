"""Regularized log sums and the Dilcher sums.

Walks from the divergent sum of log k (Stirling's constant) to the convergent
second differences D_k, checking each closed form against the oracle.
"""

import math

from multigamma import dilcher_sum, evaluate_series, parse_series
from multigamma.oracle import partial_sum_extrapolated
from multigamma.seriesengine import dilcher_spec

res = evaluate_series(parse_series("sum(k=1..inf, log(k))"))
print("sum log k")
print("  partial sums grow like", res.divergent_profile.format())
print("  constant term", res.constant_term.format(), "=", res.value)
print("  log sqrt(2 pi)          =", math.log(2 * math.pi) / 2)
print()

for k in (1, 2, 3, 4):
    form = dilcher_sum(k)
    rep = partial_sum_extrapolated(dilcher_spec(k), N=1024, levels=3)
    print(f"D_{k} = {form.value:.15g}")
    print(f"  closed form  {form.format()}")
    print(f"  oracle       {rep.extrapolated:.15g}  (est. error {rep.estimated_error:.1e})")

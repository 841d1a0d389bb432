"""Melzak's products in closed form.

Each product is evaluated through Barnes G and the triple gamma function,
then compared with the printed special values and a Richardson-accelerated
partial product.
"""

import math
from fractions import Fraction

from multigamma import corollary_product, melzak_product, melzak_squared_product
from multigamma.oracle import partial_product_extrapolated
from multigamma.specs import ProductSpec

print("prod (1 + 2x/k)^(-k (-1)^k)")
for x in (Fraction(1), Fraction(1, 2), Fraction(2), Fraction(-1, 4)):
    rep = partial_product_extrapolated(ProductSpec("melzak_linear", x), N=1024, levels=3)
    print(f"  x = {str(x):>4}  closed {melzak_product(float(x)):.12f}  oracle {rep.extrapolated:.12f}")
print(f"  pi/(2e)       {math.pi / (2 * math.e):.12f}")
print()

print("prod (1 - 4x^2/k^2)^(-k^2 (-1)^k), start = 1")
for x in (0.1, 0.25, 0.4):
    # the polylog form should match the gamma form
    print(f"  x = {x:<4}  gamma {melzak_squared_product(x):.12f}  polylog {corollary_product(x):.12f}")
print()

# at x = 1/2 the k = 1 factor vanishes, so start from k = 2
print(f"x = 1/2 from k = 2: {melzak_squared_product(0.5, 2):.12f}")

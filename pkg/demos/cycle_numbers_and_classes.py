"""Cycle numbers and residue classes of transformed integer tuples.

The order-n involution (2/n)*ones - identity sends integer n-tuples to
tuples whose entries all share one residue class Z + l/lambda, where the
cycle number lambda is n for odd n and n/2 for even n (halving).  This
script prints the lambda table and watches the classes appear.
"""

import numpy as np

from thetarel import apply_to_args, class_of, cycle_number, smith_matrix

print("cycle numbers (note the halving at even n):")
print("  n:      " + "  ".join(f"{n:2d}" for n in range(2, 13)))
print("  lambda: " + "  ".join(f"{cycle_number(n):2d}" for n in range(2, 13)))
print()

rng = np.random.default_rng(1)
for n in (3, 4, 5, 6):
    lam = cycle_number(n)
    xi = tuple(int(v) for v in rng.integers(-4, 5, n))
    eta = apply_to_args(smith_matrix(n), xi)
    cls = class_of(eta, lam)
    pretty = ", ".join(str(v) for v in eta)
    print(f"n={n}: {xi} -> ({pretty})")
    print(f"      every entry lies in Z + {cls.ell}/{cls.lam}")
print()
print("The class index depends on the input tuple; the denominator is")
print("always the cycle number, which is why lambda governs both the")
print("shift lattice and the coefficient exponents of the theta relations.")

"""How the choice functions trade smoothness for sparsity.

Softmax never reaches zero, sparsemax cuts hard, and 1.5-entmax sits in
between: it can return exact zeros while staying smooth near the boundary.
Run with ``python3 demos/01_entmax_family.py``.
"""

import numpy as np

from node_ensemble.choice import Entmax, entmax, entmax_bisect, gate, saturation_gap, softmax, sparsemax

z = np.array([1.2, 0.9, 0.1, -0.8])
print("scores        ", z)
print("softmax       ", np.round(softmax(z), 4))
print("1.5-entmax    ", np.round(entmax(z), 4))
print("sparsemax     ", np.round(sparsemax(z), 4))

# alpha interpolates: near 1 it looks like softmax, at 2 it is sparsemax
for alpha in (1.01, 1.25, 1.5, 1.75, 2.0):
    p = entmax_bisect(z, alpha)
    print(f"alpha={alpha:<5} support={int((p > 0).sum())}  p={np.round(p, 4)}")

# The two-way gate used for tree splits. Past |t| = gap the gate is exactly 0 or 1.
gap = saturation_gap(Entmax())
print(f"\nentmax gate saturates at |t| >= {gap:.4f}")
for t in (-3.0, -2.0, -1.0, 0.0, 1.0, 2.0, 3.0):
    print(f"  gate({t:+.1f}) = {gate(t):.6f}")

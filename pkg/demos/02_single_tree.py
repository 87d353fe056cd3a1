"""One oblivious tree, soft and hard.

A depth-2 tree picks one feature per level, compares it with a threshold,
and reads a response from a 4-entry table. With sharp selectors and a tiny
temperature the soft layer lands exactly on the hard lookup.
"""

import numpy as np

from node_ensemble.choice import Entmax
from node_ensemble.odt import LayerConfig, ODTLayer, hard_forward, layer_forward

rng = np.random.default_rng(0)
layer = ODTLayer(LayerConfig(n_in=3, num_trees=1, depth=2, tree_dim=1, choice=Entmax()), rng)

# level 0 looks at feature 0, level 1 at feature 2
F = np.zeros((1, 2, 3))
F[0, 0, 0] = F[0, 1, 2] = 5.0
layer.F.assign(F)
layer.b.assign(np.array([[0.0, 0.5]]))
layer.R.assign(np.array([[[10.0], [20.0], [30.0], [40.0]]]))

x = np.array([[-1.0, 9.0, 0.0],    # bits (0, 0) -> leaf 0
              [1.0, 9.0, 0.0],     # bits (1, 0) -> leaf 1
              [-1.0, 9.0, 1.0],    # bits (0, 1) -> leaf 2
              [0.1, 9.0, 0.6]])    # near both thresholds

print("soft, tau = 1   ", layer_forward(x, layer).data.ravel())
layer.set_tau(np.full((1, 2), 1e-6))
print("soft, tau ~ 0   ", layer_forward(x, layer).data.ravel())
print("hard lookup     ", hard_forward(x, layer).ravel())

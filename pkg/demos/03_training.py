"""Training end to end on XOR.

XOR is the smallest task that needs a feature interaction. A depth-1 tree
sees one feature at a time, so a single one is stuck near chance, while
depth-2 trees solve it. Takes around 20 seconds on one core.
"""

import numpy as np

from node_ensemble.synthetic import best_depth1_accuracy, xor
from node_ensemble.training import ModelConfig, TrainConfig, fit

data = xor(2000, seed=0)
X = np.column_stack([data.values["x0"], data.values["x1"]])
print(f"best single hard depth-1 tree: {best_depth1_accuracy(X, data.y):.3f}")

cfg = TrainConfig(batch_size=256, max_steps=3000, eval_interval=100, patience=30)
for depth in (1, 2):
    result, _ = fit(data, "classification", ModelConfig(num_layers=1, num_trees=4, depth=depth), cfg)
    print(f"depth {depth}: validation accuracy {1 - result.best_metric:.3f} "
          f"(best at step {result.best_step} of {result.steps})")

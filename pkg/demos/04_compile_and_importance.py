"""From a trained model to a sparse one, and which inputs it relies on.

Entmax selectors put zero weight on most features, so compiling keeps only
the nonzero (feature, weight) pairs. Permutation importance then shows the
two XOR inputs carry the model and the noise columns do not.
"""

import numpy as np

from node_ensemble.analysis import compile_model, permutation_importance, tree_contributions
from node_ensemble.synthetic import xor
from node_ensemble.training import ModelConfig, TrainConfig, fit, predict_head

result, parts = fit(xor(2000, n_noise=4, seed=3), "classification", ModelConfig(2, 8, 2),
                    TrainConfig(batch_size=256, max_steps=1500, eval_interval=100))
model = result.model
x_val, y_val = parts["val"]
print(f"validation error {result.best_metric:.3f}")

compiled = compile_model(model)
gap = np.abs(compiled.head(x_val) - predict_head(model, x_val)).max()
print(f"selector sparsity {compiled.sparsity():.2%}, max |compiled - dense| = {gap:.1e}")

for rec in permutation_importance(model, x_val, y_val, seed=0, repeats=3):
    name = model.preprocessor.schema[rec.feature][0]
    print(f"  {name}: {rec.mean:+.3f} error when shuffled (sd {rec.std:.3f})")

contrib = tree_contributions(model, x_val)
for i, c in enumerate(contrib):
    print(f"layer {i} tree contributions: {np.round(c, 3)}")

"""Real representations: the constraint system and first-entry normalization.

Over the reals we do not decide od directly. Instead we emit the polynomial
system whose solutions are representations, and show the normalization that
makes every vector's first coordinate 1 while keeping orthogonality.
"""
import numpy as np

from orthodim import emit_etr_system, normalize_first_entry
from orthodim.graph import complete_graph, cycle_graph
from orthodim.realrep import orthogonality_residual, random_orthogonal_representation

print(emit_etr_system(complete_graph(3), 2))

rng = np.random.default_rng(0)
g = cycle_graph(6)
vecs = random_orthogonal_representation(g, 3, rng)
out = normalize_first_entry(g, vecs, seed=1)
np.set_printoptions(precision=4, suppress=True)
print("input vectors:\n", vecs)
print("normalized:\n", out)
print("residual before", orthogonality_residual(g, vecs), "after", orthogonality_residual(g, out))

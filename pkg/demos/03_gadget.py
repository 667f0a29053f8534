"""Enumerating every representation of the co-cycle gadget.

For each listed (d, field), every d-dimensional orthogonal representation of
the complement of C_{2d} (one vector per scaling class) is enumerated and the
two cycle-adjacent vertices x0, x1 are checked: their vectors must be
orthogonal or proportional.
"""
import time

from orthodim import GF2, GF3
from orthodim.reductions import gadget_coloring, gadget_counterexamples

for d, f in [(3, GF2), (3, GF3), (4, GF2), (4, GF3)]:
    t0 = time.perf_counter()
    total, bad = gadget_counterexamples(d, f)
    print(f"d={d} over {f.name}: {total} representations, {bad} counterexamples ({time.perf_counter() - t0:.2f}s)")

for d in range(3, 7):
    print(f"d={d}: same {gadget_coloring(d, 'same')}  distinct {gadget_coloring(d, 'distinct')}")

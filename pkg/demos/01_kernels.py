"""Shrinking a graph around a small vertex cover, then checking nothing changed.

We plant a vertex cover X of size k in a random graph, build the general
kernel (one new vertex per realized neighborhood subset of size <= d) and the
real-field kernel (only subsets of size d, pruned to a polynomial basis), and
compare exact decisions over GF(2) and GF(3).
"""
from orthodim import GF2, GF3, decide_od, gen_random, kernel_general, kernel_real

D = 3

for seed in range(5):
    inst = gen_random(n=14, k=4, family="empty", density=0.6, seed=seed)
    g, x = inst.graph, inst.modulator
    general = kernel_general(g, x, D)
    real = kernel_real(g, x, D)
    print(f"seed {seed}: n={g.n} m={g.num_edges} cover={x}")
    print(f"  general kernel: {general.report.n_out} vertices (bound {general.report.bound})")
    print(f"  real kernel:    {real.report.n_out} vertices (bound {real.report.bound})")
    for f in (GF2, GF3):
        before = decide_od(g, D, f)[0]
        after = decide_od(general.graph, D, f)[0]
        print(f"  od over {f.name} <= {D}?  input {before}, general kernel {after}")
        assert before == after

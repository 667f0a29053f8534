"""The marking kernel for modulators into hereditary families, tried empirically.

For every short tuple of outside vertices, its induced pattern and a choice
of small neighborhood subsets, we keep the first tuple that realizes it.
The guarantee needs the tuple length to reach the NO-certificate size of the
family; here we cap it at 2 and measure how often decisions survive.
"""
from orthodim import GF2, GF3, decide_od, gen_random, kernel_hereditary

for family in ("empty", "path", "split"):
    agree = total = 0
    sizes = []
    for seed in range(30):
        inst = gen_random(9, 2, family, 0.5, seed)
        ker = kernel_hereditary(inst.graph, inst.modulator, 2, family, 2)
        sizes.append(ker.graph.n)
        for f in (GF2, GF3):
            total += 1
            agree += decide_od(inst.graph, 2, f)[0] == decide_od(ker.graph, 2, f)[0]
    print(f"{family:>6}: {agree}/{total} decisions preserved, kernel sizes {min(sizes)}..{max(sizes)} of 9")

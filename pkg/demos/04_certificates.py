"""Small witnesses that a subspace-choosability instance has no solution.

Every vertex v must receive a non-self-orthogonal vector from its own
subspace L(v), with adjacent vertices orthogonal. On split and cochordal
graphs a NO instance contains a NO sub-instance of bounded size; we extract
one and check it independently.
"""
from collections import Counter

from orthodim import (
    GF2,
    GF3,
    build_irreducible_split_instance,
    cochordal_no_certificate,
    decide_subchoose,
    split_no_certificate,
    verify_certificate,
)
from orthodim.graph import Family
from orthodim.harness import random_no_instance, trial_rngs

inst = build_irreducible_split_instance(3, GF3)
print(f"irreducible instance, d=3: {inst.graph.n} vertices, solvable={decide_subchoose(inst)[0]}")
for v in range(inst.graph.n):
    sub, _ = inst.restrict([w for w in range(inst.graph.n) if w != v])
    print(f"  without vertex {v}: solvable={decide_subchoose(sub)[0]}")

sizes = Counter()
for i, rng in enumerate(trial_rngs(42, 40)):
    family = (Family.SPLIT, Family.COCHORDAL)[i % 2]
    f, d = (GF2, GF3)[i // 2 % 2], 2 + i // 4 % 2
    inst = random_no_instance(rng, family, f, d)
    wit = split_no_certificate(inst) if family is Family.SPLIT else cochordal_no_certificate(inst)
    assert verify_certificate(inst, wit)
    sizes[(family.value, d, inst.graph.n, wit.size)] += 1
print("(family, d, instance size, certificate size): count")
for key, count in sorted(sizes.items()):
    print(f"  {key}: {count}")

"""
Realization cones of small coset actions
========================================

Decompose a few permutation modules over the real irreducibles and
print the subcone each constituent contributes: a multiplicity-m block
over R, C, or H.
"""

from polyreal.groups import (Permutation, quaternion_group, subgroup_generated,
                             symmetric_group)
from polyreal.gsets import coset_action
from polyreal.realization import analyze_gset, cone_report, cosine_vector_pure

# S4 acting on the 12 cosets of <(0 1)>: one block has multiplicity 2,
# so the pair is not Gelfand and the cone picks up a PSD 2x2 factor
S4 = symmetric_group(4)
H = subgroup_generated(S4, [S4.index_of(Permutation.from_cycles(4, [[0, 1]]))])
gs = coset_action(S4, H)
rep = cone_report(gs)
print("S4 / C2")
print("  points", gs.n_points, " gelfand:", rep.to_json()["gelfand"])
for s in rep.to_json()["sigma"]:
    print(f"  degree {s['degree']}  type {s['type']}  m={s['multiplicity']}"
          f"  -> {s['cone']} (dim {s['subcone_dim']})")

# the regular action of Q8: the degree-2 complex character appears with
# multiplicity 2, one quaternionic block of essential dimension 1
Q8 = quaternion_group()
gsq = coset_action(Q8, subgroup_generated(Q8, []))
repq = cone_report(gsq)
print("\nQ8 regular")
for s in repq.to_json()["sigma"]:
    print(f"  degree {s['degree']}  type {s['type']}  m={s['multiplicity']}"
          f"  -> {s['cone']}")

# cosine vectors exist for the multiplicity-one constituents; entry 0
# is always 1 and layer size times entry is an algebraic integer
an = analyze_gset(gs)
print("\ncosine vectors on S4 / C2")
for c in an.constituents:
    if c.mult != 1:
        continue
    vec = cosine_vector_pure(gs, c, an.layers)
    print(f"  degree {c.sigma.degree}:", [str(v) for v in vec])

"""
String C-groups and their Schlafli types
========================================

A string C-group is a group with distinguished involution generators:
far generators commute, and subset subgroups intersect exactly as the
index sets do.  The pentagon passes; a triple with a non-commuting far
pair fails; the icosian reflection group has type {5,3,3}.
"""

from polyreal.groups import Permutation, enumerate_group, symmetric_group
from polyreal.h4 import h4_group
from polyreal.stringc import verify_string_cgroup

# two reflections of a pentagon
r1 = Permutation.from_cycles(5, [[1, 4], [2, 3]])
r2 = Permutation.from_cycles(5, [[0, 1], [2, 4]])
D5 = enumerate_group([r1, r2])
rep = verify_string_cgroup(D5, D5.generator_indices)
print("pentagon:", rep.to_dict())

# three transpositions of S4 whose far pair does not commute
S4 = symmetric_group(4)
triple = [S4.index_of(Permutation.from_cycles(4, cycles))
          for cycles in ([[0, 1]], [[1, 2]], [[1, 3]])]
bad = verify_string_cgroup(S4, triple)
print("bad triple: passed =", bad.passed,
      " string_condition =", bad.string_condition)

# the H4 reflection group on the 120 icosians; all rechecks run inside
h4 = h4_group()
print("H4: order", h4.group.order, " schlafli", h4.schlafli)

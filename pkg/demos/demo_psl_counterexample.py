"""
PSL(2,p) coset spaces with a repeated complex constituent
=========================================================

Three involutions built from parameters (y, a, b) generate PSL(2,p) as
a string C-group of rank 3.  On the cosets of a dihedral parabolic the
degree-(p-1)/2 conjugate pair of characters appears with multiplicity
m >= ((p-1)/2 - (|H|-1)) / |H|, so m can exceed 1 while the type is C:
the cone then contains a PSD 2x2 block over C of real dimension 4.
"""

import json

from polyreal.psl2 import counterexample_pipeline, psl_search

# p = 19, stabilizer <s1,s2> of order 6: multiplicity 2, bound 2/3
rep = counterexample_pipeline(19, 2, stabilizer="s1,s2", a=8, b=7)
print(json.dumps(rep, indent=2))

# p = 43 with y of multiplicative order 7, stabilizer <s0,s1> of
# order 14: the bound becomes 4/7 and the computed multiplicity is 2
rep43 = counterexample_pipeline(43, 4, stabilizer="s0,s1")
print("\np=43:", rep43["points"], "points, schlafli", rep43["schlafli"],
      " m =", rep43["weil"]["multiplicity"], " bound", rep43["lower_bound"])

# scan small primes for a first string entry of order 3
for row in psl_search(max_p=23):
    print(row)

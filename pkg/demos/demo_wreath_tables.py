"""
Wreath squares U wr C2 and the diagonal-plus-swap subgroup
==========================================================

The character table of U wr C2 assembles from the base table: induced
characters for pairs of base characters and two extensions for each
single one.  The permutation character on the cosets of the
diagonal-plus-swap subgroup is multiplicity free, so the pair is
Gelfand for every base group.
"""

from polyreal.chartable import character_table
from polyreal.groups import symmetric_group
from polyreal.wreath import (wreath_c2, wreath_irreducibles,
                             wreath_vertex_constituents)

U = symmetric_group(3)
wg = wreath_c2(U)
print("base order", U.order, " wreath order", wg.group.order,
      " centre", wg.center.order)

table = wreath_irreducibles(wg)
print("irreducible degrees:", sorted(table.degrees))

# the assembled table must match a direct Dixon computation exactly
dixon = character_table(wg.group)
print("matches Dixon:", table.degrees == dixon.degrees
      and table.values == dixon.values)

# constituents of the vertex action: one per base character up to
# conjugation, each with multiplicity exactly one
for c in wreath_vertex_constituents(wg):
    print(f"  {c.kind:<10} base rows {c.phi_rows}  degree {c.degree}"
          + (f"  sign {c.sign}" if c.sign is not None else ""))

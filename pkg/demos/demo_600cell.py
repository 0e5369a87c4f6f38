"""
The 600-cell from the wreath model
==================================

SL(2,5) wr C2 modulo its centre acts on the 120 vertices.  The vertex
pair is Gelfand with 9 layers; the 9 pure realizations have dimensions
1,4,4,9,9,16,16,25,36 summing to 120, and every exact cosine entry
equals phi(u)/phi(1) for a base character phi.
"""

from polyreal.wreath import sixhundred_cell_report

rep = sixhundred_cell_report()
print("wreath order", rep["wreath_order"], " centre", rep["center_order"],
      " quotient", rep["group_order"])
print("points", rep["points"], " layers", rep["layer_sizes"])
print("dimensions", rep["dimensions"], "sum", sum(rep["dimensions"]))
print("gelfand:", rep["gelfand"])

print("\ncosine table (exact, one row per pure realization)")
for row in rep["cosine_table"]:
    entries = "  ".join(e["exact"] for e in row["entries"])
    print(f"  sigma deg {row['sigma_degree']:>2} <- phi deg"
          f" {row['phi_degree']}: {entries}")

"""
The 120-cell profile and the two 600-cell models
================================================

The icosian reflection group has order 14400 and Schlafli type
{5,3,3}.  Its action on the 600 cosets of the order-24 parabolic
carries multiplicities up to 3: fifteen half-lines, three PSD 2x2
factors, two PSD 3x3 factors, all of real type.  The same group acting
on the 120 vertices is rebuilt independently from the wreath quotient
and the two models must agree layer by layer and cosine by cosine.
"""

from polyreal.h4 import cross_check_600cell, h4_group, validate_120cell

h4 = h4_group()

rep = validate_120cell(h4)
print("120-cell:", rep["points"], "points,", rep["n_layers"], "layers")
print("profile:", rep["profile"])
cones = [s["cone"] for s in rep["cone"]["sigma"]]
for label in sorted(set(cones)):
    print(f"  {cones.count(label)} x {label}")

cross = cross_check_600cell(h4)
print("\n600-cell, icosian vs wreath model")
print("layer sizes:", cross["layer_sizes"])
print("(degree, multiplicity) profile:", cross["profile"])
print("cosine tables match:", cross["cosines_match"])

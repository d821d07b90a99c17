"""
Counting tilings two ways
=========================

The product formula and the transfer-matrix oracle never share code, so
agreement between them is a real check.
"""

from hexatile.formulas import intrusion_count, macmahon
from hexatile.oracle import count_tilings
from hexatile.region import build_hexagon, build_intruded

# a plain hexagon first: 2x2x2 has 20 tilings
print("hexagon 2,2,2:", macmahon(2, 2, 2).value, count_tilings(build_hexagon(2, 2, 2)))

# now cut 3 lozenges out of the bisector of a hexagon with left side 6
region = build_intruded(6, 5, 8, 3)
print("cells:", len(region), "balanced:", region.imbalance() == 0)

formula = intrusion_count(6, 5, 8, 3).value
oracle = count_tilings(region)
print("formula:", formula)
print("oracle: ", oracle)

# the odd left side removes bowties instead of lozenges
for d in range(4):
    print(f"m=7 d={d}:", intrusion_count(7, 5, 8, d).value, count_tilings(build_intruded(7, 5, 8, d)))

# one intrusion too many and the region cannot be tiled at all
print("4,5,8 with d=6:", count_tilings(build_intruded(4, 5, 8, 6)))

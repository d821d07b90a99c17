"""
Drawing regions
===============

Write a few SVG pictures into the current directory: an intruded hexagon,
a half-weight region and a hexagon with its four condensation marks.
"""

from pathlib import Path

from hexatile.region import build_h_prime, build_intruded, build_Rbar
from hexatile.render import to_svg

pictures = {
    "intruded_6_5_8_3.svg": build_intruded(6, 5, 8, 3),
    "intruded_7_5_8_3.svg": build_intruded(7, 5, 8, 3),
    "rbar_4_2_3.svg": build_Rbar(4, 2, 3),  # shaded ellipses mark weight-1/2 lozenges
    "hprime_2_3_6_2.svg": build_h_prime(2, 3, 6, 2),  # labels x, y, z, w
}

for name, region in pictures.items():
    Path(name).write_text(to_svg(region))
    print(f"wrote {name}: {len(region)} triangles")

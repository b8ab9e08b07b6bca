"""Apply the four model transformations and print where each one lands.

Run: python3 demos/transform_gallery.py
"""

from fractions import Fraction

from tesstopo import catalog
from tesstopo.transforms import (
    central_point_orbit,
    column,
    mixture,
    mixture_curve,
    planar_cairo,
    planar_stit,
    planar_voronoi,
    stratum,
)


def seven(params) -> str:
    fields = (params.edges_per_vertex, params.plates_per_edge,
              params.vertices_per_plate, params.pi_edge_share,
              params.hemi_vertex_share, params.ridge_interior_rate,
              params.side_interior_rate)
    return "(" + ", ".join(str(f) for f in fields) + ")"


# stratum: stack translated copies of a planar tessellation
print("stratum over a planar Voronoi mosaic:")
print(" ", seven(stratum(planar_voronoi())))
print("stratum over a planar division mosaic:")
print(" ", seven(stratum(planar_stit())))

# column: extrude the planar cells into prisms and cut at offset heights
print("column over the Cairo pentagon mosaic:")
print(" ", seven(column(planar_cairo())))

# central point: cone every cell over an interior point; iterating
# drives the vertex profile toward (8, 9/2)
start = catalog.get("ex06a_triangle_columns").to_params()
print("\ncentral-point iteration from triangle columns:")
for step, params in enumerate(central_point_orbit(start, steps=6)):
    ve, ep = params.edges_per_vertex, params.plates_per_edge
    print(f"  step {step}: edges/vertex {str(ve):12s} plates/edge {ep}")

# mixture: superpose independent models; a shared linear relation
# between two derived means survives any mixture
a = catalog.get("ex05_cubic").to_params()
b = catalog.get("ex09d_stit_stratum").to_params()
mix = mixture([(a, Fraction(1, 3)), (b, Fraction(2, 3))])
print("\nmixture of cubic lattice (1/3) and stacked division mosaic (2/3):")
print(" ", seven(mix))
curve = mixture_curve(a, b)
print(f"both components sit on the curve "
      f"plates/edge = {curve.offset} - {curve.inverse_coefficient}/(edges/vertex),")
print(f"so the mixture does too: kind={curve.kind}, "
      f"endpoints={[tuple(str(c) for c in pt) for pt in curve.endpoints]}")

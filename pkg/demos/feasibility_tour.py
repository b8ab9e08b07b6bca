"""Walk the staged feasible regions: plate profile window, ridge/side
rates, then the hemi/pi polygon, and draw random feasible tuples.

Run: python3 demos/feasibility_tour.py
"""

from tesstopo import classify
from tesstopo.feasibility import (
    hemi_pi_region,
    interior_rate_region,
    plate_profile_region,
    ridge_rate_interval,
    sample_feasible,
    side_rate_interval,
)
from tesstopo.scalar import as_scalar


def show_patch(label: str, patch) -> None:
    corners = ", ".join(f"({x}, {y})" for x, y in patch.vertices)
    print(f"{label}: kind={patch.kind}  vertices=[{corners}]")


# stage 1: with edges-per-vertex fixed, which (plate corners, plates per
# edge) profiles are possible at all, and where does face-to-face end?
region = plate_profile_region(8)
print(f"edges per vertex 8: face-to-face ceiling at plates per edge "
      f"{region.plate_cap}")
show_patch("face-to-face zone", region.face_to_face)
for line in region.boundaries:
    ends = " to ".join(f"({x}, {y})" for x, y in line.points)
    print(f"  boundary {line.name:24s} {ends}")

# stage 2: fix the whole cyclic triple above the ceiling; interior
# activity is now forced and lives in a (ridge, side) polygon
ve, ep, pv = as_scalar(4), as_scalar("7/2"), as_scalar("28/5")
print(f"\ncyclic triple ({ve}, {ep}, {pv}):")
show_patch("(ridge, side) rates", interior_rate_region(ve, ep, pv))
lo, hi = ridge_rate_interval(ve, ep, pv)
print(f"ridge interior rate must lie in [{lo}, {hi}]")
mid = (lo + hi) / 2
slo, shi = side_rate_interval(ve, ep, pv, mid)
print(f"at ridge rate {mid}, side rate must lie in [{slo}, {shi}]")

# stage 3: with the rates fixed too, the hemi share and pi-edge share
# are confined to a final polygon (here a segment)
show_patch("(hemi, pi) shares", hemi_pi_region(ve, ep, pv, mid, slo))

# the sampler composes the three stages; everything it returns passes
# the full constraint system
print("\nfive random feasible tuples (seed 42):")
for params in sample_feasible(count=5, seed=42):
    fields = (params.edges_per_vertex, params.plates_per_edge,
              params.vertices_per_plate, params.pi_edge_share,
              params.hemi_vertex_share, params.ridge_interior_rate,
              params.side_interior_rate)
    assert classify(params).feasible
    print("  (" + ", ".join(str(f) for f in fields) + ")")

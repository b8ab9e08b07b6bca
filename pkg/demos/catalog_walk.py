"""Tour the worked-example catalog: verify internal consistency, list
the entries, and evaluate one whose parameters involve pi.

Run: python3 demos/catalog_walk.py
"""

from tesstopo import catalog, classify, derive

report = catalog.verify_catalog()
print(f"catalog self-check: {report.checked} recorded values checked, "
      f"{len(report.failures)} failures, ok={report.ok}")

print("\nentries:")
for entry in catalog.entries():
    marks = []
    if entry.face_to_face:
        marks.append("face-to-face")
    if not entry.is_complete:
        marks.append("partial")
    suffix = f"  [{', '.join(marks)}]" if marks else ""
    print(f"  {entry.entry_id:32s} {entry.title}{suffix}")

# entries built from Poisson hyperplanes and their refinements carry
# pi-dependent means; exact arithmetic keeps them symbolic until asked
entry = catalog.get("ex08_divided_delaunay")
print(f"\n{entry.entry_id}: {entry.title}")
params = entry.to_params()
print(f"  pi-edge share, exact:   {params.pi_edge_share}")
print(f"  pi-edge share, decimal: {params.pi_edge_share.evaluate(25)}")
summary = derive(params)
zv = summary.mean_adjacencies[("cell", "vertex")]
print(f"  boundary vertices per cell: {zv} = {zv.evaluate(25)}")
print(f"  feasible: {classify(params).feasible}")

# parametric families accept arguments in the id itself
for spec in ("ex11_spoke_cube(k=0,n=0)", "ex11_spoke_cube(k=3,n=2)"):
    entry = catalog.get(spec)
    params = entry.to_params()
    print(f"\n{spec}: edges/vertex {params.edges_per_vertex}, "
          f"plates/edge {params.plates_per_edge}, "
          f"vertices/plate {params.vertices_per_plate}")

"""Derive every secondary quantity from a parameter tuple, then test it
against the constraint system.

Run: python3 demos/derive_and_check.py
"""

from tesstopo import TessParams, classify, derive

CLASSES = ("vertex", "edge", "plate", "cell")


def show(title: str, params: TessParams) -> None:
    print(f"\n=== {title} ===")
    summary = derive(params)
    print("intensities (per unit volume):")
    for key, value in summary.intensities.items():
        print(f"  {key:18s} {str(value):>10s}")
    print("mean adjacency matrix (row adjacent-to column):")
    header = "".join(f"{c:>10s}" for c in CLASSES)
    print(f"  {'':8s}{header}")
    for row in CLASSES:
        cells = []
        for col in CLASSES:
            if row == col:
                cells.append("1")
            else:
                cells.append(str(summary.mean_adjacencies[(row, col)]))
        print(f"  {row:8s}" + "".join(f"{c:>10s}" for c in cells))
    print(f"typical cell: {summary.apices_per_cell} apices, "
          f"{summary.ridges_per_cell} ridges, {summary.sides_per_cell} sides")

    report = classify(params)
    print(f"branch: {report.branch}; feasible: {report.feasible}")
    if report.boundary:
        print(f"on boundary of: {', '.join(report.boundary)}")


# the cubic lattice: the canonical face-to-face reference point
show("cubic lattice", TessParams.create(6, 4, 4))

# an iterated-division model: maximal interior activity at every vertex
show("iterated chord division", TessParams.create(
    4, 3, "36/7", 1, "2/3", 2, "4/3"))

# the same cyclic triple with the interior activity switched off is
# infeasible: above the face-to-face ceiling some side rate is forced
broken = TessParams.create(4, "7/2", "28/5", "1/10", 0, 0, 0)
report = classify(broken)
print("\n=== forced interior activity ===")
print(f"plates per edge 7/2 exceeds the face-to-face ceiling 3, "
      f"so zero rates are rejected: feasible={report.feasible}")
print(f"violated: {', '.join(report.violated)}")

"""Constructions that turn tessellations into tessellations.

Three constructions lift planar data or existing spatial parameters to new
spatial parameter sets, exactly:

* :func:`stratum` stacks congruent slabs over a planar tessellation and
  shifts alternate layers, so the planar pattern appears in every slab.
* :func:`column` erects an infinite prism over every planar cell and cuts
  each column independently into segments.
* :func:`central_point` places one new vertex inside every cell and cones
  it to the cell boundary.

The fourth, :func:`mixture`, combines whole parameter sets with ergodic
weights. Each primitive object class carries its own weighting intensity,
which is why the mixed means are not plain convex combinations.

A planar input is summarised by :class:`PlanarParams`: mean edges per
vertex, the share of pi-vertices (vertices in the relative interior of a
side of some planar cell), the mean number of pi-vertex endpoints per
edge, and the second moment of the vertex degree. The last two only
matter for :func:`column`, which is sensitive to degree fluctuations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import MixtureShareError, PlanarParameterError
from .params import TessParams, derive
from .scalar import ONE, ZERO, Scalar, ScalarLike, as_scalar

__all__ = [
    "PlanarParams",
    "planar_voronoi",
    "planar_delaunay",
    "planar_stit",
    "planar_voronoi_delaunay_overlay",
    "planar_square_grid",
    "planar_triangle_grid",
    "planar_hexagon_grid",
    "planar_cairo",
    "planar_gridded_square",
    "stratum",
    "column",
    "central_point",
    "central_point_orbit",
    "mixture",
    "MixtureCurve",
    "mixture_curve",
]


@dataclass(frozen=True)
class PlanarParams:
    """Parameters of a stationary planar tessellation."""

    edges_per_vertex: Scalar
    pi_vertex_share: Scalar = ZERO
    pi_ends_per_edge: Scalar = ZERO
    degree_second_moment: Scalar | None = None
    vertex_intensity: Scalar = ONE

    @classmethod
    def create(cls,
               edges_per_vertex: ScalarLike,
               pi_vertex_share: ScalarLike = 0,
               pi_ends_per_edge: ScalarLike = 0,
               degree_second_moment: ScalarLike | None = None,
               vertex_intensity: ScalarLike = 1) -> "PlanarParams":
        p = cls(
            edges_per_vertex=as_scalar(edges_per_vertex),
            pi_vertex_share=as_scalar(pi_vertex_share),
            pi_ends_per_edge=as_scalar(pi_ends_per_edge),
            degree_second_moment=(None if degree_second_moment is None
                                  else as_scalar(degree_second_moment)),
            vertex_intensity=as_scalar(vertex_intensity),
        )
        p.validate()
        return p

    def validate(self) -> None:
        ve = self.edges_per_vertex
        phi = self.pi_vertex_share
        ends = self.pi_ends_per_edge
        if self.vertex_intensity.sign() <= 0:
            raise PlanarParameterError("vertex intensity must be positive")
        if ve < 3:
            raise PlanarParameterError("planar vertices have at least three edges")
        if phi < 0 or phi > 1:
            raise PlanarParameterError("pi vertex share must lie in [0, 1]")
        if ends < 0 or ends > 2:
            raise PlanarParameterError("pi ends per edge must lie in [0, 2]")
        # pi-vertices have degree >= 3, other vertices too; both facts cap
        # how the per-edge and per-vertex pi counts can combine
        if ends < 6 * phi / ve:
            raise PlanarParameterError(
                "pi ends per edge too small for the pi vertex share")
        if ends > 2 - 6 * (1 - phi) / ve:
            raise PlanarParameterError(
                "pi ends per edge too large for the pi vertex share")
        # cells have >= 3 corners, and a pi vertex is a corner of one cell
        # fewer than its degree
        if ve > 6 - 2 * phi:
            raise PlanarParameterError(
                "mean degree exceeds what three-cornered planar cells allow")
        if self.degree_second_moment is not None and self.degree_second_moment < ve * ve:
            raise PlanarParameterError(
                "degree second moment cannot undercut the squared mean")


def planar_voronoi(vertex_intensity: ScalarLike = 1) -> PlanarParams:
    """Planar Poisson-Voronoi: almost surely degree 3, side to side."""
    return PlanarParams.create(3, 0, 0, 9, vertex_intensity)


def planar_delaunay(vertex_intensity: ScalarLike = 1) -> PlanarParams:
    """Planar Poisson-Delaunay: mean degree 6; the degree fluctuates and
    its second moment has no simple closed form, so it is left unset."""
    return PlanarParams.create(6, 0, 0, None, vertex_intensity)


def planar_stit(vertex_intensity: ScalarLike = 1) -> PlanarParams:
    """Planar iterated division by chords: every vertex is a T-vertex."""
    return PlanarParams.create(3, 1, 2, 9, vertex_intensity)


def planar_voronoi_delaunay_overlay(vertex_intensity: ScalarLike = 1) -> PlanarParams:
    """Superposition of a planar Voronoi tessellation with its dual;
    crossings dominate and the mean degree is 4."""
    return PlanarParams.create(4, 0, 0, None, vertex_intensity)


def planar_square_grid(vertex_intensity: ScalarLike = 1) -> PlanarParams:
    return PlanarParams.create(4, 0, 0, 16, vertex_intensity)


def planar_triangle_grid(vertex_intensity: ScalarLike = 1) -> PlanarParams:
    return PlanarParams.create(6, 0, 0, 36, vertex_intensity)


def planar_hexagon_grid(vertex_intensity: ScalarLike = 1) -> PlanarParams:
    return PlanarParams.create(3, 0, 0, 9, vertex_intensity)


def planar_cairo(vertex_intensity: ScalarLike = 1) -> PlanarParams:
    """The pentagonal tiling with degree-3 and degree-4 vertices in 2:1
    proportion."""
    return PlanarParams.create(Fraction(10, 3), 0, 0, Fraction(34, 3), vertex_intensity)


def planar_gridded_square(n: int, vertex_intensity: ScalarLike = 1) -> PlanarParams:
    """Square grid with a hub vertex inside each cell, joined by 4n spokes
    whose feet land n per side; feet from the two adjoining cells
    interleave, so every grid side carries 2n degree-3 T-feet."""
    if not isinstance(n, int) or n < 1:
        raise PlanarParameterError("the spoke count n must be a positive integer")
    return PlanarParams.create(
        Fraction(2 * (4 * n + 1), 2 * n + 1),
        Fraction(2 * n, 2 * n + 1),
        Fraction(6 * n, 4 * n + 1),
        Fraction(2 * (4 * n * n + 9 * n + 4), 2 * n + 1),
        vertex_intensity,
    )


def stratum(planar: PlanarParams) -> TessParams:
    """Stack shifted slabs over a planar tessellation.

    Only the planar mean degree and pi-vertex share matter; slab height is
    one unit, so the spatial vertex intensity equals the planar one.
    """
    planar.validate()
    ve = planar.edges_per_vertex
    phi = planar.pi_vertex_share
    return TessParams.create(
        edges_per_vertex=ve + 2,
        plates_per_edge=6 * ve / (ve + 2),
        vertices_per_plate=3 * ve / (ve - 1),
        pi_edge_share=2 * phi / (ve + 2),
        hemi_vertex_share=0,
        ridge_interior_rate=2 * phi,
        side_interior_rate=phi,
        vertex_intensity=planar.vertex_intensity,
    )


def column(planar: PlanarParams) -> TessParams:
    """Cut independent columns over the planar cells.

    Every new vertex has exactly four edges. Cut plates are the planar
    cells; wall plates feel the planar degree fluctuations, so the second
    moment of the degree is required.
    """
    planar.validate()
    if planar.degree_second_moment is None:
        raise PlanarParameterError(
            "column construction needs the degree second moment")
    ve = planar.edges_per_vertex
    phi = planar.pi_vertex_share
    ends = planar.pi_ends_per_edge
    m2 = planar.degree_second_moment
    return TessParams.create(
        edges_per_vertex=4,
        plates_per_edge=(3 * ve + m2) / (2 * ve),
        vertices_per_plate=2 * (3 * ve + m2) / (3 * ve - 2),
        pi_edge_share=Fraction(1, 2) + ends / 4,
        hemi_vertex_share=ends / 2 - phi / ve,
        ridge_interior_rate=(m2 + 3 * phi) / ve - 1 - ends / 2,
        side_interior_rate=(m2 + phi) / ve - 2,
        vertex_intensity=planar.vertex_intensity * (ve - phi),
    )


def central_point(params: TessParams) -> TessParams:
    """Cone every cell to one interior point.

    Old vertices keep their edges and gain one spoke per adjacent cell;
    old plates survive and each (cell, ridge) pair spawns a new plate, so
    every count below is exact bookkeeping over the old parameters. The
    new vertex intensity is the old one plus the cell intensity.
    """
    s = derive(params)  # validates that the input has positive intensities
    ve, ep, pv = params.edges_per_vertex, params.plates_per_edge, params.vertices_per_plate
    xi, kappa = params.pi_edge_share, params.hemi_vertex_share
    psi, tau = params.ridge_interior_rate, params.side_interior_rate

    spread = ve * ep - pv * (ve - 4)  # positive whenever the input derives
    budget = 4 - ve + ve * ep - 2 * kappa - 2 * psi
    plate_budget = ve * ep * (pv + 1) - pv * (ve * xi + 2 * psi)

    return TessParams.create(
        edges_per_vertex=2 * pv * (ve - 4 - ve * ep + 2 * kappa + 2 * psi)
        / (pv * (ve - 4) - ve * ep),
        plates_per_edge=(4 * ve * ep - 3 * ve * xi - 4 * psi) / budget,
        vertices_per_plate=pv * (4 * ve * ep - 3 * ve * xi - 4 * psi) / plate_budget,
        pi_edge_share=ve * xi / (ve * (ep - 1) + 4 - 2 * kappa - 2 * psi),
        hemi_vertex_share=2 * pv * kappa / spread,
        ridge_interior_rate=4 * pv * psi / spread,
        side_interior_rate=2 * pv * (tau + psi) / spread,
        vertex_intensity=params.vertex_intensity + s.intensities["cells"],
    )


def central_point_orbit(params: TessParams, steps: int) -> tuple[TessParams, ...]:
    """The input followed by ``steps`` successive conings."""
    if steps < 0:
        raise ValueError("steps must be nonnegative")
    out = [params]
    for _ in range(steps):
        out.append(central_point(out[-1]))
    return tuple(out)


def mixture(components: Sequence[tuple[TessParams, ScalarLike]]) -> TessParams:
    """Ergodic mixture of parameter sets.

    Weights must be positive and sum to one. Each mean is averaged with
    the intensity of its subject class: vertex means with the vertex
    intensity, edge means with the edge intensity, plate means with the
    plate intensity.
    """
    if not components:
        raise MixtureShareError("a mixture needs at least one component")
    pairs = [(p, as_scalar(w)) for p, w in components]
    for _, w in pairs:
        if w.sign() <= 0:
            raise MixtureShareError("mixture weights must be positive")
    total = sum(w for _, w in pairs)
    if total != 1:
        raise MixtureShareError(f"mixture weights sum to {total}, not 1")

    wv = [w * p.vertex_intensity for p, w in pairs]
    we = [w * p.vertex_intensity * p.edges_per_vertex / 2 for p, w in pairs]
    wp = [w * p.vertex_intensity * p.edges_per_vertex * p.plates_per_edge
          / (2 * p.vertices_per_plate) for p, w in pairs]
    sv, se, sp = sum(wv), sum(we), sum(wp)

    def vertex_mean(field: str) -> Scalar:
        return sum(w * getattr(p, field) for (p, _), w in zip(pairs, wv)) / sv

    def edge_mean(field: str) -> Scalar:
        return sum(w * getattr(p, field) for (p, _), w in zip(pairs, we)) / se

    return TessParams.create(
        edges_per_vertex=vertex_mean("edges_per_vertex"),
        plates_per_edge=edge_mean("plates_per_edge"),
        vertices_per_plate=sum(
            w * p.vertices_per_plate for (p, _), w in zip(pairs, wp)) / sp,
        pi_edge_share=edge_mean("pi_edge_share"),
        hemi_vertex_share=vertex_mean("hemi_vertex_share"),
        ridge_interior_rate=vertex_mean("ridge_interior_rate"),
        side_interior_rate=vertex_mean("side_interior_rate"),
        vertex_intensity=sv,
    )


@dataclass(frozen=True)
class MixtureCurve:
    """Locus traced in the (edges per vertex, plates per edge) plane as a
    two-component mixture weight sweeps from one end to the other.

    For distinct vertex degrees the locus is a hyperbola arc
    ``plates_per_edge = offset - inverse_coefficient / edges_per_vertex``.
    """

    kind: str  # "curve" | "vertical" | "point"
    endpoints: tuple[tuple[Scalar, Scalar], tuple[Scalar, Scalar]]
    offset: Scalar | None = None
    inverse_coefficient: Scalar | None = None

    @property
    def matches_plate_cap(self) -> bool:
        """True when the locus lies on the face-to-face ceiling curve."""
        return self.offset == 6 and self.inverse_coefficient == 12

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "endpoints": [[x.to_json(), y.to_json()] for x, y in self.endpoints],
            "offset": None if self.offset is None else self.offset.to_json(),
            "inverse_coefficient": (None if self.inverse_coefficient is None
                                    else self.inverse_coefficient.to_json()),
        }


def mixture_curve(first: TessParams, second: TessParams) -> MixtureCurve:
    ve1, ep1 = first.edges_per_vertex, first.plates_per_edge
    ve2, ep2 = second.edges_per_vertex, second.plates_per_edge
    ends = ((ve1, ep1), (ve2, ep2))
    if ve1 == ve2:
        kind = "point" if ep1 == ep2 else "vertical"
        return MixtureCurve(kind, ends)
    offset = (ep1 * ve1 - ep2 * ve2) / (ve1 - ve2)
    inv = (ep1 - ep2) * ve1 * ve2 / (ve1 - ve2)
    return MixtureCurve("curve", ends, offset, inv)

import dataclasses
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from tesstopo.errors import DegenerateIntensityError, ParameterDomainError
from tesstopo.params import (
    TessParams,
    cell_intensity_form,
    check_identities,
    derive,
    is_consistent,
)
from tesstopo.scalar import PI2, Scalar


CUBIC = TessParams.create(6, 4, 4)


def test_cubic_lattice_derivation():
    s = derive(CUBIC)
    assert s.intensities["edges"] == 3
    assert s.intensities["plates"] == 3
    assert s.intensities["cells"] == 1
    assert s.mean_adjacent("vertex", "plate") == 12
    assert s.mean_adjacent("vertex", "cell") == 8
    assert s.mean_adjacent("cell", "vertex") == 8
    assert s.mean_adjacent("cell", "edge") == 12
    assert s.mean_adjacent("cell", "plate") == 6
    assert (s.apices_per_cell, s.ridges_per_cell, s.sides_per_cell) == (8, 12, 6)
    assert s.corners_per_plate == 4
    assert s.corners_per_cell_side == 4
    assert s.pi_edges_per_vertex == 0


def test_iterated_division_cell_statistics():
    # a well-known non-face-to-face division process: cuboid cells
    p = TessParams.create(4, 3, Fraction(36, 7), pi_edge_share=1,
                          hemi_vertex_share=Fraction(2, 3),
                          ridge_interior_rate=2,
                          side_interior_rate=Fraction(4, 3))
    s = derive(p)
    assert s.mean_adjacent("cell", "vertex") == 24
    assert (s.apices_per_cell, s.ridges_per_cell, s.sides_per_cell) == (8, 12, 6)
    assert s.intensities["cells"] == Scalar(Fraction(1, 6))
    assert is_consistent(s)


def test_simplex_cell_statistics_with_pi_squared_values():
    # duals of the previous family: simplex cells, parameters in Q(pi^2)
    ve = Scalar((70, 48), (35,))
    ep = Scalar((0, 144), (35, 24))
    p = TessParams.create(ve, ep, 3)
    s = derive(p)
    assert (s.apices_per_cell, s.ridges_per_cell, s.sides_per_cell) == (4, 6, 4)
    assert s.mean_adjacent("vertex", "plate") == Scalar((0, 144), (35,))
    assert is_consistent(s)


def test_prism_family_polygon_statistics():
    p = TessParams.create(4, Fraction(7, 2), Fraction(28, 5),
                          pi_edge_share=Fraction(1, 2),
                          ridge_interior_rate=3, side_interior_rate=2)
    s = derive(p)
    assert s.corners_per_cell_side == 4
    assert s.corners_per_plate == 4
    assert is_consistent(s)


def test_form_values():
    assert cell_intensity_form(Scalar(6), Scalar(4), 4) == 8
    assert cell_intensity_form(Scalar(6), Scalar(4), 2) == 16


def test_degenerate_intensity_raises():
    with pytest.raises(DegenerateIntensityError):
        derive(TessParams.create(6, 4, 12))


def test_domain_validation():
    with pytest.raises(ParameterDomainError):
        TessParams.create(0, 4, 4)
    with pytest.raises(ParameterDomainError):
        TessParams.create(6, 4, 4, pi_edge_share=2)
    with pytest.raises(ParameterDomainError):
        TessParams.create(6, 4, 4, ridge_interior_rate=-1)
    with pytest.raises(ParameterDomainError):
        TessParams.create(6, 4, 4, vertex_intensity=0)


def test_face_to_face_flag():
    assert CUBIC.is_face_to_face
    assert not CUBIC.with_values(pi_edge_share=Fraction(1, 2)).is_face_to_face


def test_with_values_revalidates():
    with pytest.raises(ParameterDomainError):
        CUBIC.with_values(hemi_vertex_share=3)


def test_params_json_round_trip():
    p = TessParams.create(4, 3, Fraction(36, 7), pi_edge_share=1,
                          hemi_vertex_share=Fraction(2, 3),
                          ridge_interior_rate=2,
                          side_interior_rate=Fraction(4, 3))
    assert TessParams.from_json(p.to_json()) == p
    with pytest.raises(ParameterDomainError):
        TessParams.from_json({"edges_per_vertex": 6})
    with pytest.raises(ParameterDomainError):
        TessParams.from_json({"edges_per_vertex": 6, "plates_per_edge": 4,
                              "vertices_per_plate": 4, "bogus": 1})


def test_tampered_summary_is_flagged():
    s = derive(CUBIC)
    bad = dataclasses.replace(
        s, intensities={**s.intensities, "plates": s.intensities["plates"] + 1})
    assert is_consistent(s)
    assert not is_consistent(bad)
    res = check_identities(bad)
    assert res["euler_intensities"] != 0
    assert res["pairing_vertex_plate"] != 0


rational = st.fractions(min_value=0, max_value=3).map(lambda q: Fraction(q).limit_denominator(12))


@st.composite
def valid_params(draw):
    ve = 3 + draw(rational)
    ep = 3 + draw(rational)
    pv = 3 + draw(rational)
    xi = draw(rational) / 3
    kappa = draw(rational) / 3
    psi = draw(rational)
    tau = draw(rational)
    p = TessParams.create(ve, ep, pv, xi, kappa, psi, tau,
                          vertex_intensity=1 + draw(rational))
    return p


@given(valid_params())
def test_identities_hold_whenever_derivation_succeeds(p):
    try:
        s = derive(p)
    except DegenerateIntensityError:
        return
    assert all(not v for v in check_identities(s).values())


@given(valid_params())
def test_intensity_scaling_is_linear(p):
    try:
        s1 = derive(p)
    except DegenerateIntensityError:
        return
    s3 = derive(p.with_values(vertex_intensity=p.vertex_intensity * 3))
    for k, v in s1.intensities.items():
        assert s3.intensities[k] == 3 * v
    assert s3.mean_adjacencies == s1.mean_adjacencies

import json
from fractions import Fraction
from math import comb

import pytest

import vortexq


def test_dimension_matches_binomial():
    report = vortexq.vortex_dimension(2, 3, 5)
    assert report.dimension == 10
    assert report.euler_characteristic == 10
    assert report.vanishing_guaranteed
    assert report.method == "hrr_ring"
    assert report.area_quanta == Fraction(5)


def test_large_dimension_is_exact():
    report = vortexq.vortex_dimension(1, 50, 100, method="closed_form")
    assert report.dimension == comb(100, 50)
    assert report.method == "closed_form"


def test_boundary_has_no_dimension():
    report = vortexq.vortex_dimension(0, 3, 3)
    assert report.dimension is None
    assert report.euler_characteristic == 1
    assert not report.vanishing_guaranteed
    assert report.notes


def test_rational_area():
    report = vortexq.vortex_dimension(1, 2, Fraction(7, 2))
    assert report.dimension is None
    assert report.closed_form is None
    # k(k-1)/2 at k = 7/2
    assert report.euler_characteristic == Fraction(35, 8)
    with pytest.raises(vortexq.IntegralityError):
        vortexq.closed_form_dimension(1, 2, "7/2")


def test_euler_characteristic_of_custom_class():
    # Degree-5 bundle on a genus-2 curve: 5 - 2 + 1.
    assert vortexq.euler_characteristic(2, 1, 1, eta_coeff=3, sigma_coeffs=[1, 1]) == 4
    assert vortexq.euler_characteristic(2, 3, 5) == 10


def test_todd_and_residue():
    assert vortexq.todd_series(4) == [1, Fraction(1, 2), Fraction(1, 12), 0, Fraction(-1, 720)]
    assert vortexq.residue_coefficient(2, 3) == 10


def test_classes_and_verify():
    classes = vortexq.classes(2, 3, 5)
    assert classes["sum_class"]["text"] == "4*eta"
    assert classes["sum_identity_holds"] is True
    report = vortexq.verify_reduced_ring(2, 3)
    assert report["discrepancy_count"] == 0
    with pytest.raises(vortexq.SizeBoundError):
        vortexq.verify_reduced_ring(5, 8)


def test_report_json_and_cli():
    report = vortexq.vortex_dimension(2, 3, 5)
    assert json.loads(report.to_json())["dimension"] == "10"
    code, out, err = vortexq.run_cli(["dimension", "-g", "0", "-n", "3", "-k", "3", "--format", "json"])
    assert code == 2
    assert json.loads(out)["euler_characteristic"] == "1"
    assert "warning" in err

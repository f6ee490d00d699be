"""Exact Hilbert-space dimensions for N vortices on a genus-g surface."""

import json
from fractions import Fraction

from . import _core
from ._core import (
    ConsistencyError,
    DimensionReport,
    IntegralityError,
    SizeBoundError,
    residue_coefficient,
    run_cli,
    todd_series,
)

__all__ = [
    "ConsistencyError",
    "DimensionReport",
    "IntegralityError",
    "SizeBoundError",
    "classes",
    "closed_form_dimension",
    "euler_characteristic",
    "residue_coefficient",
    "run_cli",
    "todd_series",
    "verify_reduced_ring",
    "vortex_dimension",
]


def _rational(value):
    if isinstance(value, (int, Fraction)):
        return str(value)
    if isinstance(value, str):
        return value
    raise TypeError(f"expected int, Fraction or str, got {type(value).__name__}")


def vortex_dimension(genus, vortices, area_quanta, method="hrr_ring"):
    return _core.vortex_dimension(genus, vortices, _rational(area_quanta), method)


def euler_characteristic(genus, vortices, area_quanta, eta_coeff=None, sigma_coeffs=None):
    """Euler characteristic of the line bundle with c_1 = a*eta + sum b_i*sigma_i.

    Defaults to the quantum line bundle of the given parameters.
    """
    eta = "" if eta_coeff is None else _rational(eta_coeff)
    sigma = [] if sigma_coeffs is None else [_rational(b) for b in sigma_coeffs]
    return _core.euler_characteristic(genus, vortices, _rational(area_quanta), eta, sigma)


def closed_form_dimension(genus, vortices, area_quanta):
    return _core.closed_form_dimension(genus, vortices, _rational(area_quanta))


def classes(genus, vortices, area_quanta):
    return json.loads(_core.classes_json(genus, vortices, _rational(area_quanta)))


def verify_reduced_ring(genus, vortices):
    return json.loads(_core.verify_reduced_ring(genus, vortices))
